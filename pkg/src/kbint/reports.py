"""JSON and CSV serialization of verification records.

Floats are written in shortest round-trip form (``repr``). NaN becomes
``null`` in JSON and an empty cell in CSV; both read back as NaN.
"""
import csv
import io
import json
import math

INT_FIELDS = {"quad_evals", "series_terms"}
STR_FIELDS = {"kind", "status"}


def _encode(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def dumps_json(records):
    return json.dumps([{k: _encode(v) for k, v in r.items()} for r in records], indent=1) + "\n"


def dumps_csv(records, fields):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in records:
        row = []
        for name in fields:
            v = _encode(r[name])
            row.append("" if v is None else repr(v) if isinstance(v, float) else v)
        writer.writerow(row)
    return buf.getvalue()


def dumps(records, fields, fmt):
    if fmt == "json":
        return dumps_json(records)
    if fmt == "csv":
        return dumps_csv(records, fields)
    raise ValueError(f"unknown format {fmt!r}")


def _decode(name, value):
    if name in STR_FIELDS:
        return value
    if value is None or value == "":
        return math.nan
    if name in INT_FIELDS:
        return int(value)
    return float(value)


def loads(text, fmt):
    """Parse records written by :func:`dumps` back into dicts."""
    if fmt == "json":
        rows = json.loads(text)
    elif fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return [{k: _decode(k, v) for k, v in row.items()} for row in rows]
