"""Jeu de taquin, evacuation and the Burge correspondence."""
import random

from lrsym.jdt import anti_normal, contracting_slide, evacuate, rectify
from lrsym.plactic import burge, dual_equivalent, knuth_equivalent
from lrsym.tableau import Tableau, row_word, standardize

T = Tableau.parse("..1111/.122/233")
corner = T.shape.inside_corners()[0]
slid, vacated = contracting_slide(T, corner)
print("one slide into", corner, "vacates", vacated)
print(slid)

R = rectify(T)
print("\nrectification:")
print(R)
# any order of inner corners gives the same answer
rng = random.Random(1)
print("same under 20 random corner orders:", all(rectify(T, rng) == R for _ in range(20)))
print("anti-normal form:")
print(anti_normal(T))

P = Tableau.parse("11112/223/33")
print("\nevacuation of", P, "is", evacuate(P), "and back", evacuate(evacuate(P)))

pair = burge(row_word(standardize(T)))
print("\nBurge P symbol:")
print(pair.p)
print("Q symbol:")
print(pair.q)
print("Knuth equivalent to its rectification:", knuth_equivalent(T, R))
print("dual equivalent to itself standardized:", dual_equivalent(T, standardize(T)))
