import math

from polardet.poly import dirichlet, parse_poly
from polardet.verify import check_log_ineq, log_integral, mahler_log, szego_sequence

# det T(n, |1+z|^2) = n + 1, so the n-th root creeps down to 1
seq = szego_sequence([dirichlet(2)], [1], 64)
for term in seq[::8]:
    print(term.n, term.det, round(term.root, 4))

# the limit is exp of the log mean; here the mean is 0
print(log_integral([dirichlet(2)], [1]))

# log Mahler measure two ways: quadrature vs roots
f = parse_poly("1+z-z^2")
val, err = log_integral([f], [1])
print(val, err, mahler_log(f), 2 * math.log((1 + math.sqrt(5)) / 2))

# the kernel has the smaller log mean
r = check_log_ineq([f], [1])
print(r.verdict.value, r.lhs, r.rhs)
