import json

import biextra


def test_construct_summary():
    g = biextra.construct("B+(2)")
    assert g.rank == 2
    assert g.q_order == 64
    assert g.order == 384
    assert g.type == "+"


def test_type_multiplication():
    assert biextra.group_type("B+(2) * B-(2)") == (4, "-")
    assert biextra.group_type("B-(2) * B-(2)") == (4, "+")
    assert biextra.group_type("B-2") == (2, "-")


def test_dent_table():
    table = json.loads(biextra.dent_table_json("B-2"))
    assert table["group"] == {"rank": 2, "type": "-"}
    assert len(table["dents"]) == 3
    assert all(rec["kind"] == "nonsingular" for rec in table["dents"])


def test_gram_is_symplectic():
    qvals, gram = biextra.gram("B+(4)")
    assert len(qvals) == 4
    for i in range(4):
        assert gram[i][i] == 0
        for j in range(4):
            assert gram[i][j] == gram[j][i]


def test_rt_summary():
    rt = biextra.rt_summary("B+(2)")
    assert rt["order"] == 8
    assert rt["center_order"] == 2
    assert rt["order_histogram"] == {1: 1, 2: 5, 4: 2}


def test_out_report():
    rep = biextra.out_report("B-2")
    assert rep == {"kernel": 4, "image": 6, "total": 24, "split": "yes"}


def test_isomorphism_certificate():
    cert = json.loads(biextra.isom_certificate_json("B-(2) * B-(2)", "B+(4)"))
    assert cert["verified"] is True
    assert cert["source"] == {"rank": 4, "type": "+"}


def test_type_mismatch_raises():
    try:
        biextra.isom_certificate_json("B+(2)", "B-(2)")
    except ValueError:
        pass
    else:
        raise AssertionError("expected a ValueError for mismatched types")


def test_axioms():
    assert biextra.axioms_passed("B+(2)")
    assert biextra.axioms_passed("B-(2)")
