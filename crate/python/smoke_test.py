"""Smoke test for the Python bindings.

Build and install first:
    pip install --no-build-isolation ./crates/py
then run:
    python python/smoke_test.py
"""

import treeadvice_py as ta


def main():
    # symbol sequences come back as bytes
    assert list(ta.encode_sequence([3, 5], 2)) == [1, 1, 1, 1, 0, 1, 1, 0, 1, 1]
    assert ta.decode_sequence(list(ta.encode_sequence([0, 7, 300], 3)), 3) == [0, 7, 300]

    tree = ta.Tree.random(120, seed=7, diameter=30)
    assert tree.node_count == 120 and tree.diameter == 30
    assert ta.Tree.parse(tree.to_text()).to_text() == tree.to_text()

    for tau in (0, 3, 15):
        advice = ta.advise(tree, "unbounded", tau)
        outcome = ta.elect(tree, advice)
        assert outcome.passed, f"unbounded election failed at tau={tau}"
        assert outcome.elected == tree.root
        assert outcome.size == advice.size

    small = ta.Tree.random(7, seed=1)
    tau, colors, leader = ta.election_index(small, 2)
    assert len(colors) == 7 and 0 <= leader < 7 and tau <= small.diameter
    advice = ta.advise(small, "colored-map", tau)
    assert ta.elect(small, advice).passed and advice.valency <= 2

    beta1, beta2 = ta.betas(0.8, 2)
    assert 0 < beta1 < beta2 < 0.5

    try:
        ta.advise(tree, "nonsense", 1)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown scheme accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
