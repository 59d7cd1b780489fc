"""Smoke tests for the python module; runnable plain or under pytest."""

import palinruler as pr


def test_point_values():
    assert pr.ruler(8) == 3
    assert pr.period_doubling(8) == 1
    assert pr.run_count(1000) == 4
    assert [pr.ruler(n) for n in range(1, 9)] == [0, 1, 0, 2, 0, 1, 0, 3]


def test_pal_length():
    b = pr.pal_length("b", 17)
    assert b[0] == 0 and b[17] == 2 and b[11] == 3
    a = pr.pal_length("a", 64)
    assert all(a[n] == pr.run_count(n) for n in range(1, 65))


def test_factors_and_suffixes():
    assert pr.pal_suffixes("b", 17) == [11, 15, 16, 17]
    assert pr.is_pal_factor("b", 4, 5)
    assert not pr.is_pal_factor("b", 3, 7)
    assert pr.is_pal_factor("a", 1, 3)
    assert not pr.is_pal_factor("a", 2, 4)


def test_min_ops():
    count, ops = pr.min_ops("10101")
    assert count == 2 and ops == ["B(5,1,2)", "B(5,2,3)"]
    count_a, ops_a = pr.min_ops("10101", type_a_only=True)
    assert count_a == 5 and len(ops_a) == 5


def test_level_sets_and_dfa():
    assert pr.level_set("run-count", 1, 15) == [1, 3, 7, 15]
    dfa = pr.run_count_dfa(2)
    members = set(pr.level_set("run-count", 2, 256))
    assert all(pr.dfa_accepts(dfa, n) == (n in members) for n in range(1, 257))

    learned = pr.learn_level_set_dfa("run-count", 2, 512, 8)
    assert learned["dfa"] == dfa
    assert learned["equivalence_rounds"] >= 1


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("smoke tests passed")
