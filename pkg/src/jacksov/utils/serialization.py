from typing import Callable, Any, Union, Dict, List, Optional, Tuple
from fractions import Fraction
import dataclasses
import json

from ..exact import format_rational

VALID_JSON_TYPE = Union[int, float, str, bool, list, dict, type(None)]


@dataclasses.dataclass
class Encdata:
    data: Any
    done: bool = False
    handeled: bool = False


encodertype = Callable[
    [Any],
    Union[Tuple[Any, bool], Encdata],
]


class JSONEncoder(json.JSONEncoder):
    """
    JSON encoder with a class-keyed registry of encoders.

    Encoders are looked up along the MRO of the object's type. An encoder
    returns an :class:`Encdata` (or a ``(data, handled)`` tuple); handled data
    is encoded again unless it is marked ``done``.
    """

    encoder_registry: Dict[type, List[encodertype]] = {}

    @classmethod
    def add_encoder(cls, enc: encodertype, enc_cls: Optional[List[type]] = None):
        """
        Appends an encoder for the given classes (default: every object).

        Examples:
          >>> def complex_encoder(obj):
          ...     if isinstance(obj, complex):
          ...         return [obj.real, obj.imag], True
          ...     return obj, False
          >>> JSONEncoder.add_encoder(complex_encoder, [complex])
        """
        if enc_cls is None:
            enc_cls = [object]
        for _enc_cls in enc_cls:
            cls.encoder_registry.setdefault(_enc_cls, []).append(enc)

    @classmethod
    def prepend_encoder(cls, enc: encodertype, enc_cls: Optional[List[type]] = None):
        """Like add_encoder, but the encoder is tried first."""
        if enc_cls is None:
            enc_cls = [object]
        for _enc_cls in enc_cls:
            cls.encoder_registry.setdefault(_enc_cls, []).insert(0, enc)

    @classmethod
    def apply_custom_encoding(cls, obj, seen=None):
        """
        Recursively converts `obj` into JSON-native data.

        Raises:
          ValueError: on circular references.
        """
        if seen is None:
            seen = set()

        obj_id = id(obj)
        if obj_id in seen:
            raise ValueError("Circular reference detected.")
        seen.add(obj_id)

        try:
            for base in type(obj).__mro__:
                for enc in cls.encoder_registry.get(base, ()):
                    encres = enc(obj)
                    if not isinstance(encres, Encdata):
                        res, handled = encres
                        encres = Encdata(data=res, handeled=handled)
                    if encres.handeled:
                        if encres.done:
                            return encres.data
                        return cls.apply_custom_encoding(encres.data, seen=seen)

            if isinstance(obj, (int, float, bool, str, type(None))):
                return obj
            if isinstance(obj, dict):
                return {
                    (key if isinstance(key, str) else str(key)): cls.apply_custom_encoding(
                        value, seen=seen
                    )
                    for key, value in obj.items()
                }
            if isinstance(obj, (set, frozenset, tuple, list)):
                return [cls.apply_custom_encoding(item, seen=seen) for item in obj]

            return str(obj)
        finally:
            seen.remove(obj_id)

    def default(self, obj):
        return self.apply_custom_encoding(obj)


def fraction_handler(obj) -> Encdata:
    """Rationals are serialized as "p/q" strings."""
    if isinstance(obj, Fraction):
        return Encdata(data=format_rational(obj), handeled=True, done=True)
    return Encdata(data=obj, handeled=False)


JSONEncoder.add_encoder(fraction_handler, [Fraction])


def _repr_json_(obj) -> Encdata:
    """
    Encodes objects that have a _repr_json_ method.
    """
    if hasattr(obj, "_repr_json_"):
        return Encdata(data=obj._repr_json_(), handeled=True)
    return Encdata(data=obj, handeled=False)


JSONEncoder.add_encoder(_repr_json_)


def dataclass_handler(obj) -> Encdata:
    """
    Encodes dataclasses to dictionaries, field by field.
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return Encdata(
            data={f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)},
            handeled=True,
        )
    return Encdata(data=obj, handeled=False)


JSONEncoder.add_encoder(dataclass_handler)
