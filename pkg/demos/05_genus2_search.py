"""Searching for the smallest genus-2 quotient that satisfies the inequality."""
from rcdim import Modes, check_genus2, make_setup, search_genus2
from rcdim.selmer import Place, PlaceKind

setup = make_setup(2, 1)
res = search_genus2(setup, k_max=20, m_max=99, bk=True)
print(res.witness, len(res.reports), "candidates")
for rep in res.reports:
    print(rep.params["k"], rep.params["m"], rep.lhs_total, rep.rhs, rep.holds)

best = res.reports[-1]
for t in best.lhs_terms:
    print(t.name, t.value, t.provenance)
print(best.mode_labels)

# exact involution traces never make the left side larger
print(check_genus2(setup, 2, 1, Modes(minus="exact-trace"), bk=True).lhs_total)

# counting F^0 with the full graded Witt profile pushes the witness out
print(search_genus2(setup, 20, 99, Modes(f0="graded-witt"), bk=True).witness)

# more places in T: a bad place with a = 1 next to the good one
wider = make_setup(2, 1, [Place("p", PlaceKind.P_ADIC), Place("l", PlaceKind.GOOD), Place("q", PlaceKind.BAD, 1)])
print(search_genus2(wider, 20, 99, bk=True).witness)

# the report serializes to JSON and back
print(best.to_json(indent=1)[:200])
