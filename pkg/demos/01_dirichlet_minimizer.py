from polardet.poly import dirichlet, enumerate_littlewood, format_poly, parse_poly
from polardet.toeplitz import gram, toeplitz_rect, toeplitz_symbol
from polardet.exact import det_exact
from polardet.verify import check_det_ineq

# Toeplitz matrix of |f|^2 for f = 1 + z - z^2, n = 3
f = parse_poly("1+z-z^2")
T = toeplitz_symbol([f], [1], 3)
print(T.rows)

# same matrix from the rectangular factor
M = toeplitz_rect(f, 3)
print(gram(M).rows == T.rows)

# determinant of every sign pattern with 4 terms, n = 3
for g in enumerate_littlewood(4):
    print(format_poly(g).ljust(16), det_exact(toeplitz_symbol([g], [1], 3)))

# the all-ones kernel gives the smallest one (1-z+z^2-z^3 is D_4(-z), so it ties)
print("D_4:", det_exact(toeplitz_symbol([dirichlet(4)], [1], 3)))

# weighted sum of two families, one report per comparison
r = check_det_ineq([f, parse_poly("1-z")], ["1/2", "3"], 3)
print(r.verdict.value, r.lhs, r.rhs)
