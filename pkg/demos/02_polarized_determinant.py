from polardet.matrix import ExactMat
from polardet.mixed import (compositions, gamma_binet_cauchy, gamma_from_mixed,
                            gamma_multilinear, mixed_discriminant)
from polardet.poly import dirichlet, parse_poly
from polardet.toeplitz import gram, toeplitz_rect

n = 3
Ms = [toeplitz_rect(dirichlet(3), n), toeplitz_rect(parse_poly("1+z^2"), n)]
As = [gram(M) for M in Ms]

# det(x A_1 + y A_2) as a table of coefficients
table = gamma_multilinear(As)
for idx, g in table.items():
    print(idx, g)

# the same coefficients two other ways
for idx in compositions(n, 2):
    print(idx, gamma_binet_cauchy(Ms, idx), gamma_from_mixed(As, idx))

# evaluating the table gives back the determinant
print(table.evaluate([1, 1]))

# mixed discriminant of (D_2 Gram, identity): 2
I2 = ExactMat([[1, 0], [0, 1]])
print(mixed_discriminant([gram(toeplitz_rect(dirichlet(2), 2)), I2]))
