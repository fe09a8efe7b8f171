"""Smoke tests for the _ortholab extension module."""

import json
import sys

import _ortholab as ol


def check(cond, what):
    if not cond:
        print(f"FAIL: {what}")
        sys.exit(1)
    print(f"ok: {what}")


def main():
    fi = ol.field_info(9)
    check(fi["p"] == 3 and fi["m"] == 2 and fi["modulus"] == [1, 0, 1],
          "GF(9) parameters and modulus")

    cm = ol.canonical_matrix(3, 3, "one")
    check(len(cm) == 3 and cm[0][0] == 1, "canonical matrix shape")
    fc = ol.classify_form(3, cm)
    check(fc["cls"] == "one" and fc["rank"] == 3,
          "classify round-trips the canonical representative")

    # An anisotropic plane over GF(3): x^2 + y^2 has no nonzero root.
    fc2 = ol.classify_form(3, [[1, 0], [0, 1]])
    check(fc2["cls"] == "gamma", "identity plane over GF(3) is class gamma")

    try:
        ol.field_info(6)
        check(False, "composite order must be rejected")
    except ValueError as e:
        check("NotPrime" in str(e), "composite order raises NotPrime")

    c = ol.construct("remark2", 2, 4, "dot")
    check(c["size"] == 7 and c["k"] == 3, "remark2 generator size")
    v = ol.verify_set(2, 4, ol.canonical_matrix(2, 4, "dot"),
                      c["vectors"], 3, 2)
    check(v["holds"], "remark2 set verifies as (3,2)-orthogonal")
    v2 = ol.verify_set(2, 4, ol.canonical_matrix(2, 4, "dot"),
                       c["vectors"], 2, 2)
    check(not v2["holds"] and len(v2["witness"]) == 2,
          "remark2 set is not pairwise orthogonal")

    b = ol.bound(3, 4, "one", "s22")
    check(b["value"] == 8 and b["in_range"], "closed-form table value")

    rep = ol.search(3, 4, "one", k=2, threads=1)
    check(rep["optimal"] and rep["size"] == 8, "exact search hits the table")
    check(rep["matches_formula"], "search agrees with the closed form")
    cert = json.loads(rep["certificate"])
    check(cert["size"] == 8 and cert["type"] == "search",
          "certificate parses and matches")

    rep2 = ol.search(7, 2, "one", k=3, threads=1)
    check(rep2["size"] == 12 and rep2["construction_size"] == 12,
          "(3,2) search matches its generator")

    pairs = ol.count_orthogonal_pairs(5, 2, "one",
                                      [[1, 0], [0, 1], [1, 1]],
                                      [[1, 0], [0, 1], [1, 1]])
    check(pairs >= 1, "orthogonal-pair count runs with internal checks")

    check(ol.verify_c5(), "five-vertex check")
    rf = ol.ramsey()
    check(rf["r33_lower_ok"] and rf["r33_upper_ok"] and rf["r34_ok"],
          "small Ramsey facts")
    check("remark2" in ol.construction_names(), "construction name listing")

    print("smoke: PASS")


if __name__ == "__main__":
    main()
