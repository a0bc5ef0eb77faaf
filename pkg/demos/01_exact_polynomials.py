"""Tour of the exact polynomial layer.

Everything downstream rests on being able to decide divisibility by linear
forms exactly: an edge congruence either holds or it does not, with no
tolerance knob anywhere.
"""

from fractions import Fraction

from gkm import Polynomial, Vector, congruent_mod_linear, lin_form

x1 = Polynomial.variable(2, 0)
x2 = Polynomial.variable(2, 1)

# Weight vectors embed as linear forms.
alpha = Vector((-1, -2))
print("lin_form((-1,-2)) =", lin_form(alpha))

# Arithmetic is exact; text form is graded-lex, leading terms first.
f = (x1 + x2) * (x1 - x2) + Fraction(1, 3)
print("f =", f)

# Division by a linear form either succeeds exactly or raises.
g = (x1 - x2) * (x1 + 5 * x2)
print("g / (x1 - x2) =", g.divide_by_linear(x1 - x2))

# The congruence that defines graph cohomology: f == g mod a weight form.
print("x1^2 == x2^2 mod (x1 - x2)?", congruent_mod_linear(x1**2, x2**2, x1 - x2))
print("x1   == 0    mod x2?      ", congruent_mod_linear(x1, Polynomial.zero(2), x2))

# Exact evaluation doubles as an independent oracle for the localization
# machinery later on.
print("f(2, 3) =", f.evaluate((2, 3)))
