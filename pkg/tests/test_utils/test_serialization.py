import unittest
import json
import dataclasses
from fractions import Fraction
from pathlib import Path
import tempfile

from jacksov.sympoly import SymPoly
from jacksov.unipoly import UniPoly
from jacksov.utils.files import dumps, write_json_secure
from jacksov.utils.serialization import Encdata, JSONEncoder


class DummyRepr:
    def _repr_json_(self):
        return {"repr": "dummy"}


@dataclasses.dataclass
class Point:
    x: int
    y: Fraction


class TestSerialization(unittest.TestCase):
    def test_basic_types(self):
        data = {"int": 1, "bool": True, "none": None, "str": "test"}
        self.assertEqual(json.loads(json.dumps(data, cls=JSONEncoder)), data)

    def test_fraction_as_string(self):
        self.assertEqual(dumps(Fraction(-3, 4)), '"-3/4"')
        self.assertEqual(dumps(Fraction(6, 3)), '"2"')

    def test_dataclass_encoding(self):
        encoded = dumps(Point(10, Fraction(1, 3)))
        self.assertEqual(json.loads(encoded), {"x": 10, "y": "1/3"})

    def test_repr_json(self):
        self.assertEqual(json.loads(dumps(DummyRepr())), {"repr": "dummy"})

    def test_tuple_keys_are_stringified(self):
        encoded = JSONEncoder.apply_custom_encoding({(1, 0): Fraction(3, 4)})
        self.assertEqual(encoded, {"(1, 0)": "3/4"})

    def test_value_types(self):
        p = SymPoly(2, {(1, 1): Fraction(4, 3), (2, 0): 1})
        self.assertEqual(
            json.loads(dumps(p)),
            {
                "nvars": 2,
                "basis": "monomial",
                "terms": [
                    {"mu": [2, 0], "coeff": "1"},
                    {"mu": [1, 1], "coeff": "4/3"},
                ],
            },
        )
        self.assertEqual(json.loads(dumps(UniPoly([1, Fraction(1, 2)]))), {"coeffs": ["1", "1/2"]})

    def test_circular_reference_list(self):
        a = []
        b = {"self": a}
        a.append(b)
        with self.assertRaises(ValueError) as context:
            JSONEncoder.apply_custom_encoding(a)
        self.assertIn("Circular reference detected", str(context.exception))

    def test_circular_reference_dict(self):
        a = {}
        a["self"] = a
        with self.assertRaises(ValueError) as context:
            JSONEncoder.apply_custom_encoding(a)
        self.assertIn("Circular reference detected", str(context.exception))

    def test_prepend_encoder(self):
        class Marker:
            pass

        def marker_encoder(obj):
            return Encdata(data="marker", handeled=True, done=True)

        JSONEncoder.prepend_encoder(marker_encoder, [Marker])
        try:
            self.assertEqual(JSONEncoder.apply_custom_encoding(Marker()), "marker")
        finally:
            JSONEncoder.encoder_registry[Marker].remove(marker_encoder)

    def test_fallback_to_str(self):
        class Unsupported:
            def __str__(self):
                return "unsupported"

        self.assertEqual(JSONEncoder.apply_custom_encoding(Unsupported()), "unsupported")


class TestWriteJsonSecure(unittest.TestCase):
    def test_writes_atomically(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "sub" / "report.json"
            write_json_secure({"value": Fraction(5, 2)}, target)
            self.assertEqual(json.loads(target.read_text(encoding="utf-8")), {"value": "5/2"})
            self.assertEqual([p.name for p in target.parent.iterdir()], ["report.json"])


if __name__ == "__main__":
    unittest.main()
