"""Gallery: every path correspondence applied to one worked example.

Each section shows an input path, its image, and the round trip back.
"""

from latticepaths import (
    LatticePath,
    StepSet,
    bohm_rotate,
    bohm_to_unit,
    bohm_unrotate,
    drop_one,
    integer_slope,
    inverse_slope,
    koroljuk_to_unit,
    lemma_translate,
    lemma_translate_back,
    raise_one,
    reflect_inverse,
    reflect_inverse_back,
    unit_to_bohm,
    unit_to_koroljuk,
)

UNIT = StepSet.unit()


def show(title: str, before: LatticePath, after: LatticePath, back: LatticePath) -> None:
    print(title)
    print(f"  input:      {before.encode() or '(empty)'} @ {before.start}")
    print(f"  image:      {after.encode() or '(empty)'} @ {after.start}")
    print(f"  round trip: {back.encode() or '(empty)'} @ {back.start}")
    assert back == before, "round trip must be the identity"
    print()


def main() -> None:
    line = integer_slope(1, 0)
    path = LatticePath.decode("VH", UNIT, (0, 1))
    image = drop_one(path, line)
    show("drop one: strict family onto the weak family one row down",
         path, image, raise_one(image, line))

    path = LatticePath.decode("VH", UNIT, (1, 1))
    image = lemma_translate(path, line)
    show("translate: slide start and end by (-1, -k)",
         path, image, lemma_translate_back(image, line))

    inv = inverse_slope(2, 0)
    path = LatticePath.decode("VHH", UNIT, (0, 0))
    image = reflect_inverse(path, inv)
    show("reflect: inverse-slope family onto the integer-slope family",
         path, image, reflect_inverse_back(image, inv, end=path.end))

    kor = StepSet.koroljuk(1)
    walk = LatticePath.decode("UDU", kor, (0, 0))
    image = koroljuk_to_unit(walk, 2)
    show("walk to unit path: reverse, ups become verticals",
         walk, image, unit_to_koroljuk(image, 1, 2))

    walk = LatticePath.decode("DUU", kor, (0, 0))
    rotated = bohm_rotate(walk, 2)
    show("rotate a walk into an altitude sequence",
         walk, rotated, bohm_unrotate(rotated, 2))
    print(f"  altitudes along the rotated walk: "
          f"{[point[1] for point in rotated.points()]}")
    print()

    unrolled = bohm_to_unit(rotated)
    show("altitude walk to unit path (and back)",
         rotated, unrolled, unit_to_bohm(unrolled, 1, rotated.end[1]))

    composite = bohm_to_unit(bohm_rotate(walk, 2))
    direct = koroljuk_to_unit(walk, 2)
    print(f"composite rotate-then-unroll equals the direct map: "
          f"{composite == direct}")
    assert composite == direct


if __name__ == "__main__":
    main()
