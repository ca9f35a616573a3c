"""Paper-example fixtures shared by the unit and acceptance suites."""

from fractions import Fraction

from glicci.algebra import Lex, Monomial, Polynomial, Variable, y_first_order


def P(*terms):
    return Polynomial([(Monomial(m), Fraction(c)) for c, m in terms])


def ex59():
    """(y^2 - xz, yr - st) with variables y > x > z > r > s > t."""
    y, x, z, r, s, t = (Variable(i) for i in range(1, 7))
    gens = [P((1, {y: 2}), (-1, {x: 1, z: 1})),
            P((1, {y: 1, r: 1}), (-1, {s: 1, t: 1}))]
    order = y_first_order([y, x, z, r, s, t], y)
    return gens, order, dict(y=y, x=x, z=z, r=r, s=s, t=t)


def ex511_second():
    """(y^2 z + y t^2 + s^3, ys + t^2) in Q[y,x,z
    ,r,s,t], lex with t<s<r<z<x<y."""
    y, x, z, r, s, t = (Variable(i) for i in range(1, 7))
    gens = [P((1, {y: 2, z: 1}), (1, {y: 1, t: 2}), (1, {s: 3})),
            P((1, {y: 1, s: 1}), (1, {t: 2}))]
    order = Lex([y, x, z, r, s, t])
    return gens, order, dict(y=y, x=x, z=z, r=r, s=s, t=t)


def ex514():
    """(y^2 a + y d^2, y^2 c + b^3, cd^2, b^3 d^2, ab^3), lex y>a>b>c>d."""
    y, a, b, c, d = (Variable(i) for i in range(1, 6))
    gens = [
        P((1, {y: 2, a: 1}), (1, {y: 1, d: 2})),
        P((1, {y: 2, c: 1}), (1, {b: 3})),
        P((1, {c: 1, d: 2})),
        P((1, {b: 3, d: 2})),
        P((1, {a: 1, b: 3})),
    ]
    order = Lex([y, a, b, c, d])
    return gens, order, dict(y=y, a=a, b=b, c=c, d=d)


def ex62():
    """(yz - x^2, wz^2 - y^2 x, wxz - y^3), lex w > x > y > z."""
    w, x, y, z = (Variable(i) for i in range(1, 5))
    gens = [
        P((1, {y: 1, z: 1}), (-1, {x: 2})),
        P((1, {w: 1, z: 2}), (-1, {y: 2, x: 1})),
        P((1, {w: 1, x: 1, z: 1}), (-1, {y: 3})),
    ]
    order = Lex([w, x, y, z])
    return gens, order, dict(w=w, x=x, y=y, z=z)


def minors_2x3():
    """Size-2 minors of a generic 2x3 matrix; entries x_{ij} as bases 1..6."""
    a = {(i, j): Variable(3 * (i - 1) + j) for i in (1, 2) for j in (1, 2, 3)}

    def m(*pairs):
        return Monomial({a[p]: 1 for p in pairs})

    g1 = Polynomial([(m((1, 1), (2, 2)), Fraction(1)), (m((1, 2), (2, 1)), Fraction(-1))])
    g2 = Polynomial([(m((1, 1), (2, 3)), Fraction(1)), (m((1, 3), (2, 1)), Fraction(-1))])
    g3 = Polynomial([(m((1, 2), (2, 3)), Fraction(1)), (m((2, 2), (1, 3)), Fraction(-1))])
    order = y_first_order(sorted(a.values()), a[(1, 1)])
    return [g1, g2, g3], order, a


def redundant_gens():
    """G1 = {yt - z^2} and G2 = G1 + {y^2 t - y z^2} generate the same
    principal ideal, but only G1's polarization stays a Groebner basis."""
    y, z, t = Variable(1), Variable(2), Variable(3)
    g = P((1, {y: 1, t: 1}), (-1, {z: 2}))
    g2 = P((1, {y: 2, t: 1}), (-1, {y: 1, z: 2}))
    order = y_first_order([y, z, t], y)
    return g, g2, order, dict(y=y, z=z, t=t)
