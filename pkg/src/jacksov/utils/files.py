import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional, Type, Union

from .serialization import JSONEncoder


def write_json_secure(
    data: Any,
    filepath: Union[str, Path],
    cls: Optional[Type[json.JSONEncoder]] = None,
    **kwargs,
):
    """
    Writes JSON to `filepath` through a temporary file in the same directory,
    so readers never see a half-written file.

    Rationals and the package's value types are encoded with :class:`JSONEncoder`
    unless another encoder class is given.
    """
    filepath = Path(filepath)
    directory = filepath.parent
    directory.mkdir(parents=True, exist_ok=True)
    cls = cls or JSONEncoder

    with tempfile.NamedTemporaryFile(
        "w+", dir=directory, delete=False, encoding="utf-8", suffix=".tmp"
    ) as temp_file:
        temp_file_path = temp_file.name
        try:
            json.dump(data, temp_file, cls=cls, **kwargs)
            temp_file.flush()
            os.fsync(temp_file.fileno())
        except Exception:
            temp_file.close()
            os.remove(temp_file_path)
            raise

    os.replace(temp_file_path, filepath)


def dumps(data: Any, **kwargs) -> str:
    """json.dumps with the package encoder."""
    kwargs.setdefault("cls", JSONEncoder)
    return json.dumps(data, **kwargs)
