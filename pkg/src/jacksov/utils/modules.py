import importlib


def resolve(dotted_name: str):
    """
    Resolves a dotted name such as "logging.handlers.RotatingFileHandler" to
    the object it names, importing submodules as needed.

    Raises:
        ImportError: if no prefix of the name is importable.
        AttributeError: if an attribute along the path does not exist.

    Examples:
      >>> resolve("logging.StreamHandler")
      <class 'logging.StreamHandler'>
    """
    parts = dotted_name.split(".")
    module_name = parts.pop(0)
    current = importlib.import_module(module_name)
    for part in parts:
        module_name = f"{module_name}.{part}"
        try:
            current = getattr(current, part)
        except AttributeError:
            current = importlib.import_module(module_name)
    return current
