"""The Eisenstein quotient of a modular curve: where does the inequality start to hold?"""
from rcdim import check_modular, search_modular

rep = check_modular(6, 2)
for t in rep.lhs_terms:
    print(t.name, t.value)
print(rep.lhs_total, "<", rep.rhs, rep.holds)

print(check_modular(5, 2).holds)   # 11 vs 11, not strict

# the threshold moves with the number of places in T
for num_T in range(2, 9):
    print(num_T, search_modular(num_T))

# only even n allowed
print(search_modular(3, admissible=lambda n: n % 2 == 0))

# a full table of margins
for n in range(1, 11):
    r = check_modular(n, 3)
    print(n, r.lhs_total, r.rhs, r.margin)
