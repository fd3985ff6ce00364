"""Free Lie algebra dimensions, two ways."""
from rcdim import graded_witt, lie_sigma_trace, lyndon_count, lyndon_profile, witt
from rcdim.freelie import lyndon_words
from rcdim.graded import GradedDim, SignedGradedDim

# the Moebius formula and a brute-force count of Lyndon words
for t in (2, 3, 4):
    print(t, [witt(t, s) for s in range(1, 9)])
    print(t, [lyndon_count(t, s) for s in range(1, 9)])

# the two Lyndon words of length 3 on {a, b}: aab and abb
print(["".join("ab"[i] for i in w) for w in lyndon_words(2, 3)])

# with weights: two generators of weight -1 and -2 give one bracket of weight -3
print(graded_witt(GradedDim({-1: 1, -2: 1}), 2))

# a bigger profile, layer of bracket length 5
gen = GradedDim({-2: 1, -1: 2, 0: 3})
print(graded_witt(gen, 5), "total", witt(gen.total(), 5))

# an involution acting by +1 on one generator and -1 on the other:
# the single bracket [u+, u-] is odd
print(lie_sigma_trace(2, 0, 2))
print(lyndon_profile(SignedGradedDim({0: (2, 0)}), 2).trace)

# zero trace and odd length means the two eigenspaces have the same size
for n in (1, 3, 5, 7):
    print(n, witt(6, n), lie_sigma_trace(6, 0, n))
