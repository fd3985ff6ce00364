"""The Selmer bound for a genus-2 quotient, layer by layer."""
from rcdim import build_generator_space, make_setup, selmer_upper_bound
from rcdim.selmer import f0_base_dim, f0_layer_dim, minus_dim

setup = make_setup(genus=2, gprime=1)  # T = {p, one good place l}
gen = build_generator_space(setup, m=3)

print(gen.total, "=", gen.h1_dim, "x", gen.sym_dim)
print("HT profile", gen.profile_ht.graded)
print("Frobenius at l", gen.profile_frob["l"].graded)   # pure of weight -1
print("F^0 base", f0_base_dim(gen))

report = selmer_upper_bound(setup, gen, k=4, bk=True)
for lb in report.per_layer:
    print(lb.kprime, lb.layer_total, dict(lb.h2_local), lb.minus_dim, lb.layer_bound)
print("total", report.total_bound)

# from k' = 2 on the good place contributes nothing: the twisted dual
# of the layer has only positive weights

# the paper-bound minus count against the exact trace
for kp in range(5):
    print(kp, minus_dim(gen, kp, "paper-bound"), minus_dim(gen, kp, "exact-trace"))

# F^0 per layer in the two counting modes
print([f0_layer_dim(gen, kp, "paper-rule") for kp in range(5)])
print([f0_layer_dim(gen, kp, "graded-witt") for kp in range(5)])

# without the BK flag there is no bound to give
try:
    selmer_upper_bound(setup, gen, k=2, bk=False)
except ValueError as exc:
    print(exc)
