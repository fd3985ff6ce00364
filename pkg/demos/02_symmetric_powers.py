"""Weight profiles of Sym^m V."""
from rcdim import FundamentalRep, sym_frob_grading, sym_ht_grading, sym_sigma_trace
from rcdim.graded import ht_max_entry_bound, max_entry_ratio, sym_pure_grading

V1 = FundamentalRep(1)          # dim V = 2
V2 = FundamentalRep(2, {"l": 1})  # dim V = 4, one bad place with a = 1

# Hodge-Tate: g' = 1 gives the constant profile, one dimension per weight
print(sym_ht_grading(V1, 4))
print(sym_ht_grading(V2, 3))

# Frobenius at a bad place (weights 0, 1, 2) versus a good place (pure)
print(sym_frob_grading(V2, "l", 2))
print(sym_pure_grading(V2, 2))

# the largest Hodge-Tate entry takes a shrinking share of the total
for m in (1, 5, 9, 13, 17):
    prof = sym_ht_grading(V2, m)
    print(m, prof.total(), prof.max_entry(), float(max_entry_ratio(prof)), float(ht_max_entry_bound(2, m)))

# complex conjugation: trace 0 for odd m, 1 on Sym^2n of a 2-dim V
print([sym_sigma_trace(V1, m) for m in range(1, 11)])
print([sym_sigma_trace(V2, m) for m in range(1, 11)])
