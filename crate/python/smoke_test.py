"""Smoke test for the hatlab Python extension."""

import json

import hatlab


def petersen() -> str:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    lines = [f"10 {len(edges)}"] + [f"{min(u, v)} {max(u, v)}" for u, v in edges]
    return "\n".join(lines) + "\n"


def main() -> None:
    s4 = hatlab.PermGroup(4, ["(0 1 2 3)", "(0 1)"])
    assert s4.order() == "24", s4
    assert s4.contains("(1 2)")
    assert hatlab.PermGroup(4, ["(0 1)(2 3)"]).orbits() == [[0, 1], [2, 3]]

    assert hatlab.automorphisms(petersen()).order() == "120"
    assert hatlab.coset_count("gens a b\na^2; b^3; (a*b)^5") == 60

    count, complete, quads = hatlab.pair_search("A4s")
    assert (count, complete) == (2, True)
    assert all(q == ["S5", "F5", "A4", "C2"] for q in quads)

    report = json.loads(hatlab.run_example("4.3"))
    assert report["passed"], report
    print("hatlab smoke test passed")


if __name__ == "__main__":
    main()
