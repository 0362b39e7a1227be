from .cli_export import entrypoint

entrypoint()
