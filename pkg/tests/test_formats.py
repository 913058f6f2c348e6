import csv
import io
import json

from nps_tableaux import formats, oracle
from nps_tableaux.engine import nps_sort
from nps_tableaux.shapes import Partition, cell_order_from_tableau
from nps_tableaux.tableaux import Tabloid


def test_trace_json():
    doc = formats.trace_json(nps_sort(Tabloid.parse("2,1;3")))
    assert doc["schema"] == formats.TRACE_SCHEMA
    assert doc["order"] == "colmajor"
    assert doc["slides"][-1] == {"cell": "1,1", "cycle": [2, 1], "path": ["1,1", "1,2"]}
    assert doc["exchanges"] == [[1, 2, "1,2", "1,1"]]
    assert doc["output"] == "1,2;3"
    json.loads(json.dumps(doc))


def test_trace_json_with_tableau_order():
    u = Tabloid.parse("1,2;3")
    doc = formats.trace_json(nps_sort(Tabloid.parse("3,1;2"), cell_order_from_tableau(u)))
    assert doc["order"] == {"tableau": "1,2;3"}


def test_trace_text():
    text = formats.trace_text(nps_sort(Tabloid.parse("1,2;3")))
    assert "0 exchanges" in text


def test_stats_csv():
    docs = formats.stats_csv(oracle.stat_tables(Partition((2, 1))))
    rows = list(csv.reader(io.StringIO(docs["drop"])))
    assert rows[0] == ["k", "1,1", "1,2", "2,1"]
    assert rows[2] == ["2", "0", "3", "3"]
    assert list(csv.reader(io.StringIO(docs["complexity"])))[1] == ["2,1", "2/3"]
    exit_rows = list(csv.reader(io.StringIO(docs["exit"])))
    assert exit_rows[1] == ["1", "-2", "1", "1"]


def test_stats_json():
    doc = formats.stats_json(oracle.stat_tables(Partition((2,))))
    assert doc["complexity"] == "1/2"
    assert doc["exchange"] == {"1": 1}
    assert doc["exit"] == {"1|1,1": -1, "1|1,2": 1}
    assert doc["local_exchange"]["1|1,2|1,1"] == 1


def test_matrix_csv():
    shapes = [Partition((1,)), Partition((2,))]
    text = formats.matrix_csv(shapes, ["a", "b"], {("1", "a"): True, ("2", "a"): False})
    assert text.splitlines() == ["shape,a,b", "1,pass,", "2,FAIL,"]
