"""Walkthrough: counting paths above a line, four ways.

Counts the paths from (0,0) to (3,5) that stay weakly above y = 2x - 1,
first by brute force, then with the closed-form sum, then via the query
wrapper, and finally lists the paths themselves.
"""

from latticepaths import (
    PathQuery,
    Strictness,
    count,
    count_weak,
    dp_count,
    enumerate_paths,
    integer_slope,
)


def main() -> None:
    line = integer_slope(2, 1)
    query = PathQuery(0, 0, 3, 5, line, Strictness.WEAK)

    print(f"boundary: {line.describe()}")
    print(f"query: (0,0) -> (3,5), weakly above")
    print()

    by_dp = dp_count(query)
    by_formula = count_weak(2, 1, 0, 0, 3, 5)
    by_wrapper = count(query)
    print(f"dynamic programming: {by_dp}")
    print(f"closed-form sum:     {by_formula}")
    print(f"query wrapper:       {by_wrapper}")
    assert by_dp == by_formula == by_wrapper
    print()

    paths = enumerate_paths(query)
    print(f"the {len(paths)} paths, lexicographically:")
    for path in paths:
        print(f"  {path.encode()}")
    assert len(paths) == by_dp

    print()
    print("Catalan row, k=1 and r=0 with square endpoints:")
    row = [count_weak(1, 0, 0, 0, m, m) for m in range(9)]
    print(f"  {row}")


if __name__ == "__main__":
    main()
