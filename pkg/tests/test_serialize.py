import json

import jsonschema
import pytest

from nkcalc.corpus import BUILTINS, builtin
from nkcalc.nk import bass_report, tk_table
from nkcalc.serialize import TABLE_SCHEMA, table_from_json, table_to_json


# the cross is neither Artinian nor a semigroup ring, so it has no table
@pytest.mark.parametrize("name", sorted(set(BUILTINS) - {"cross"}))
def test_roundtrip(name):
    A = builtin(name)
    T = tk_table(A, (-1, 3), 10)
    text = table_to_json(T, [bass_report(T, 1)])
    back = table_from_json(text)
    assert back.to_dict() == T.to_dict()
    assert table_to_json(back, [bass_report(back, 1)]) == text


def test_schema_rejects_bad_documents(dual):
    doc = json.loads(table_to_json(tk_table(dual, (0, 2))))
    doc["entries"][0]["i"] = 0
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, TABLE_SCHEMA)
    doc = json.loads(table_to_json(tk_table(dual, (0, 2))))
    doc["entries"][0]["branch"] = "guess"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, TABLE_SCHEMA)
