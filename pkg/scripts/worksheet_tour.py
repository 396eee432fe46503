"""Walk through the worksheet examples and print every result.

    python scripts/worksheet_tour.py
"""

from __future__ import annotations

from wpskit.cohomology import h_line_bundle, h_omega
from wpskit.equivalence import polytope_switch_data
from wpskit.fan import fan_from_weights, fan_weights, is_wps_fan
from wpskit.lattice import enumerate_interior_points, enumerate_lattice_points, face_dimension
from wpskit.polytope import (
    polytope_fan,
    polytope_from_weights,
    polytope_polarization,
    polytope_weights,
    qpol_mat,
    wpp_decompose,
)
from wpskit.weights import gorenstein_index, reduced_weights


def section(title: str) -> None:
    print(f"\n== {title}")


def show(label: str, value) -> None:
    if isinstance(value, tuple) and value and isinstance(value[0], tuple):
        print(f"{label}:")
        for row in value:
            print("   ", list(row))
    else:
        print(f"{label}: {value}")


def main() -> None:
    section("weights")
    for Q in ([3, 2, 4], [1, 1, 2, 4], [5, 3, 2, 2, 4, 16]):
        print(f"{Q}  reduced {list(reduced_weights(Q))}  index {gorenstein_index(Q)}")

    section("fans")
    for Q in ([3, 1, 5, 4], [3, 2, 7, 181, 22], [6, 8, 6, 7, 7, 9, 25, 2]):
        F = fan_from_weights(Q)
        show(f"fan of {Q}", F.generators)
        print("  recovered weights", list(fan_weights(F)), " wps fan", is_wps_fan(F))

    section("polytopes")
    show("qpol_mat([2, 2, 7, 4, 3, 14])", qpol_mat([2, 2, 7, 4, 3, 14]))
    wpp = wpp_decompose(qpol_mat([2, 2, 7, 4, 3, 14]))
    print("pseudo weights", wpp.pseudo_weights, " polarization", wpp.polarization)
    P = polytope_from_weights([2, 2, 7, 4, 3, 19])
    show("polytope of [2, 2, 7, 4, 3, 19]", P.vertices)
    for label, cand in (("P", P), ("P + (1,...,1)", P.translate([1] * 5)), ("3P", P.scale(3))):
        print(f"  {label}: weights {list(polytope_weights(cand))} polarization {polytope_polarization(cand)}")
    show("its fan", polytope_fan(P).generators)

    section("switching polytopes")
    P3 = [[0, 0, 0], [20, 0, 0], [-4, 12, 0], [-10, 0, 15]]
    P5 = [[0, 0, 0], [4, 0, 0], [-36, 60, 0], [-6, 0, 15]]
    data = polytope_switch_data(P3, P5)
    show("theta", data.theta)
    show("delta", data.delta)
    print("nu", list(data.nu))

    section("lattice points")
    T = [[0, 0], [0, 3], [5, 0]]
    count, pts = enumerate_lattice_points(T)
    print(f"points of {T}:", count, pts)
    count, pts = enumerate_interior_points(T)
    print("interior:", count, pts)
    print("face of (1, 1) in", T, face_dimension([1, 1], T))

    section("cohomology")
    for q, m, Q in ((0, 1, [2, 3, 5]), (0, 3, [2, 3, 5]), (0, 2, [1, 3, 3, 2]), (2, -3, [1, 1, 1])):
        print(f"h^{q}(O({m})) on P{Q}:", h_line_bundle(q, m, Q))
    for q, p, m, Q in ((0, 1, 1, [1, 2, 2, 3]), (2, 0, -1, [2, 3, 5])):
        print(f"h^{q}(Omega^{p}({m})) on P{Q}:", h_omega(q, p, m, Q))


if __name__ == "__main__":
    main()
