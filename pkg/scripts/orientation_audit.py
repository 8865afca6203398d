"""Which product does the multiplication construction realize over the quaternions?

Runs the construction twice: once with the package's right-slope lines
(y = x*m + b) and once with a left-slope variant (y = m*x + b) written out
here.  The first yields A*B, the second B*A.
"""

import argparse
import random

from desargues.construct import geo_mul
from desargues.plane import Point
from desargues.skewfield import FieldSpec


def left_slope_mul(A, B, aux):
    """Same ruler steps, but lines are y = m*x + b."""
    spec = A.spec
    O = spec.zero()

    def join(P, Q):
        m = (Q.y - P.y) * (Q.x - P.x).inv()
        return m, P.y - m * P.x

    def through(m, P):
        return m, P.y - m * P.x

    def meet(l1, l2):
        (m1, b1), (m2, b2) = l1, l2
        x = (m1 - m2).inv() * (b2 - b1)
        return Point(x, m1 * x + b1)

    I = Point(spec.one(), O)
    Ap, Bp = Point(A, O), Point(B, O)
    l_ib1 = join(I, aux)
    l_ob1 = join(Point(O, O), aux)
    P1 = meet(through(l_ib1[0], Ap), l_ob1)
    l_bb1 = join(Bp, aux)
    return meet(through(l_bb1[0], P1), (O, O)).x


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    H = FieldSpec.quaternions()
    rng = random.Random(args.seed)
    tally = {"right = A*B": 0, "left = B*A": 0, "trials": 0}
    for _ in range(args.trials):
        A, B = H.random(rng), H.random(rng)
        aux = Point(H.random(rng), H.random(rng, nonzero=True))
        if aux.x.is_zero() or aux.x == H.one():  # keep the left-slope joins non-vertical
            continue
        tally["trials"] += 1
        tally["right = A*B"] += geo_mul(A, B, aux)[0] == A * B
        tally["left = B*A"] += left_slope_mul(A, B, aux) == B * A
    i, j = H.parse_scalar("i"), H.parse_scalar("j")
    print(f"geo_mul(i, j) = {geo_mul(i, j)[0]}   left-slope variant = {left_slope_mul(i, j, Point(H.from_int(2), H.one()))}")
    for k, v in tally.items():
        print(f"{k:>12}: {v}")


if __name__ == "__main__":
    main()
