"""Search for homology classes of the five twist curves.

The composed twist word  t_a t_d^-1 t_c t_b^-1 t_d t_c^-1 t_e^-1  must act on
H_1 of the genus-2 surface as the matrix B below.  The figure the word comes
from does not pin down orientations, twist handedness, or the composition
order, so we search:

  * class vectors for a..e with entries in {-1, 0, 1} (a transvection does
    not see the sign of its curve class, so vectors are enumerated up to
    sign),
  * constrained to the 5-chain intersection pattern
    |<a,b>| = |<b,c>| = |<c,d>| = |<d,e>| = 1, all other pairs 0,
    which is what a standard chain of twist curves on a genus-2 surface
    produces,
  * both handedness conventions (positive twist = T_{+} or T_{-}),
  * both composition orders (apply leftmost twist first or last).

Writes every solution found to stdout; the first one is frozen into
src/hypnorms/data/twist_classes.txt by hand.  If the chain search found
nothing we would fall back to an unconstrained meet-in-the-middle sweep,
but it does not come to that (see output).
"""

from itertools import product

J = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
B = ((3, 0, 1, 0), (1, 0, 0, -1), (-1, 0, 0, 0), (1, 1, 1, 3))

IDENT = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def mat_mul(X, Y):
    return tuple(
        tuple(sum(X[i][k] * Y[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def mat_vec(X, v):
    return tuple(sum(X[i][k] * v[k] for k in range(4)) for i in range(4))


def pairing(x, y):
    return sum(x[i] * J[i][j] * y[j] for i in range(4) for j in range(4))


def transvection(gamma, sign):
    jg = mat_vec(J, gamma)
    return tuple(
        tuple(IDENT[i][j] + sign * gamma[i] * jg[j] for j in range(4))
        for i in range(4)
    )


def candidates():
    seen = set()
    for v in product((-1, 0, 1), repeat=4):
        if v == (0, 0, 0, 0):
            continue
        if tuple(-x for x in v) in seen:
            continue
        seen.add(v)
        yield v


CANDS = list(candidates())

# word letters as (curve index, exponent); curves indexed a=0 .. e=4
WORD = ((0, +1), (3, -1), (2, +1), (1, -1), (3, +1), (2, -1), (4, -1))


def compose(classes, handedness, reverse):
    word = WORD[::-1] if reverse else WORD
    M = IDENT
    for idx, expo in word:
        M = mat_mul(M, transvection(classes[idx], handedness * expo))
    return M


def main():
    chain_tuples = []
    for a in CANDS:
        for b in CANDS:
            if abs(pairing(a, b)) != 1:
                continue
            for c in CANDS:
                if pairing(a, c) != 0 or abs(pairing(b, c)) != 1:
                    continue
                for d in CANDS:
                    if (
                        pairing(a, d) != 0
                        or pairing(b, d) != 0
                        or abs(pairing(c, d)) != 1
                    ):
                        continue
                    for e in CANDS:
                        if (
                            pairing(a, e) != 0
                            or pairing(b, e) != 0
                            or pairing(c, e) != 0
                            or abs(pairing(d, e)) != 1
                        ):
                            continue
                        chain_tuples.append((a, b, c, d, e))
    print(f"chain-pattern tuples: {len(chain_tuples)}")

    solutions = []
    for classes in chain_tuples:
        for handedness in (+1, -1):
            for reverse in (False, True):
                if compose(classes, handedness, reverse) == B:
                    solutions.append((classes, handedness, reverse))
    print(f"solutions: {len(solutions)}")
    for classes, handedness, reverse in solutions[:20]:
        names = "abcde"
        desc = ", ".join(f"{n}={v}" for n, v in zip(names, classes))
        order = (
            "reversed product (leftmost twist acts first)"
            if reverse
            else "product in word order (rightmost twist acts first)"
        )
        print(f"  handedness={handedness:+d} order={order}: {desc}")


if __name__ == "__main__":
    main()
