"""Walking a slice of the complexified locus.

A point (b, s) lies on the level-u locus when k*b + u*s is an integer m.
At u = 0 only the k rational points survive; turning on a real u opens a
one-parameter family per branch, and a deck translation of order k permutes
everything.
"""

from bsq.ucurve import (
    branch_residual,
    deck_translate,
    trace_slice,
    zero_level_fiber,
)


def main():
    k = 3
    fiber = zero_level_fiber(k)
    print(f"u = 0, level {k}: the fiber is "
          f"{[(str(p.b), p.m) for p in fiber.points]}")

    u = 0.8 + 0j
    slc = trace_slice(k, u, (-2.0, 2.0), grid=24, tol=1e-9)
    print(f"\nu = {u.real}, same level: {len(slc.points)} traced points")
    print("  b        s             m   residual")
    for p in slc.points[:12]:
        print(f"  {str(p.b):<8} {p.s.real:>+10.6f}    {p.m:>2}  "
              f"{branch_residual(p, k):.1e}")
    if len(slc.points) > 12:
        print(f"  ... and {len(slc.points) - 12} more")

    print("\ndeck translation b -> b + 1/k walks an order-3 orbit:")
    p = slc.points[0]
    for step in range(k + 1):
        print(f"  step {step}: b={str(p.b):<6} m={p.m:>2}  "
              f"still on locus: {branch_residual(p, k) < 1e-8}")
        p = deck_translate(p, k)

    print("\na genuinely complex u pinches the slice back to the rational points:")
    pinched = trace_slice(k, 0.5 + 0.5j, (-2.0, 2.0), grid=60, tol=1e-9)
    print(f"  {[(str(p.b), p.m) for p in pinched.points]}")


if __name__ == "__main__":
    main()
