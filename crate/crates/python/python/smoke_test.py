"""Smoke test for the `cayley` extension module.

Build and run from the workspace root:

    cargo build -p cayley-py --features extension-module
    cp target/debug/libcayley.so crates/python/python/cayley.so
    python3 crates/python/python/smoke_test.py
"""

import json

import cayley


def main():
    even = cayley.Graph([("p", "a", "q"), ("q", "a", "p"), ("p", "b", "p"), ("q", "b", "q")])
    assert even.vertices == ["p", "q"]
    verdict = even.is_cayley()
    assert verdict["accepted"], verdict
    assert len(verdict["certificate"]["group"]["elements"]) == 2

    lang = even.cycle_language("p")
    assert "aa" in lang and "ab" not in lang and "" in lang
    assert lang.words(2) == ["", "b", "aa", "bb"]
    assert lang.is_stable()["stable"]
    assert lang.presentation_conditions()["cond_iii"]
    assert sorted(even.elementary_cycles("p")) == ["aa", "b"]
    assert lang.difference(even.cycle_language("q")) is None

    petersen = cayley.fixture("petersen")
    circ = petersen.is_circular()
    assert not circ["circular"]
    assert circ["witness"]["word"] == "ababa"
    assert petersen.pipeline()["steps"][-1]["name"] == "circular"

    abc = cayley.fixture("abc_automaton")
    assert abc.accepts("acbc") and not abc.accepts("ca")
    brz = abc.brzozowski()
    assert brz.is_deterministic
    assert brz.is_isomorphic(abc.language().canonical())

    z6 = cayley.Presentation(["aaaaaa", "bbb", "aba"])
    g = z6.cayley_graph()
    assert len(g) == 6
    assert g.is_cayley()["accepted"]
    trace = z6.thue("aab", "")
    assert trace is not None and trace["steps"]
    assert "aba" in z6.bounded_class(3)

    triangle = cayley.Presentation(["aaaaaa", "bb", "ababab"])
    try:
        triangle.cayley_graph(max_cosets=100)
    except cayley.CapExceeded:
        pass
    else:
        raise AssertionError("triangle group closed")
    assert triangle.ball(2, max_cosets=100)["partial"]

    z3 = json.dumps({
        "elements": ["0", "1", "2"],
        "product": [["0", "1", "2"], ["1", "2", "0"], ["2", "0", "1"]],
        "identity": "0",
        "labels": {"1": "a"},
    })
    c3 = cayley.cayley_from_group(z3)
    assert c3 == cayley.Graph.from_json(c3.to_json())
    assert c3.reconstruct("0")["root"] == "0"

    try:
        cayley.Graph([])
    except cayley.CayleyException as e:
        assert "edge" in str(e)
    else:
        raise AssertionError("empty graph accepted")

    assert "even" in cayley.fixture_names()
    print("smoke test passed")


if __name__ == "__main__":
    main()
