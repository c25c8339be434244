"""Crystal reflections on words and the reversal of an LR tableau."""
from lrsym.crystal import longest_word, reversal, sigma, sigma0
from lrsym.plactic import burge
from lrsym.tableau import Tableau, rotate, row_word

w = row_word(Tableau.parse("..1111/.122/233"))
print("w        =", w, " weight", w.weight)
for i in (1, 2):
    print(f"sigma_{i}(w) =", sigma(i, w))
print("sigma_0(w) =", sigma0(w), " weight", sigma0(w).weight)
# two reduced words for the longest permutation give the same map
print("reduced words", longest_word(3), longest_word(3, "alt"),
      "agree:", sigma0(w) == sigma0(w, longest_word(3, "alt")))
print("Q symbol kept by sigma_1:", burge(sigma(1, w)).q == burge(w).q)

T = Tableau.parse("..1111/.122/233")
E = reversal(T)
print("\nreversal of T:")
print(E)
print("rotated:")
print(rotate(E))
