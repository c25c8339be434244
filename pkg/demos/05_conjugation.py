"""The conjugation map built from reversal, rotation and the fast diamond."""
from lrsym.circuits import dilate
from lrsym.conjugation import blacklozenge_fast, fast_blacklozenge, rho3
from lrsym.switching import rho_bss
from lrsym.tableau import Tableau, blacklozenge_slow, column_word, recording_matrix

T1 = Tableau.parse("..11/.122/13")
M = recording_matrix(T1)
print("recording matrix", M.dense())
print("after the fast diamond", fast_blacklozenge(M).dense())
print("slow and fast tableau versions agree:", blacklozenge_fast(T1) == blacklozenge_slow(T1))
print(blacklozenge_fast(T1))

T = Tableau.parse("..1111/.122/233")
X = rho3(T)
print("\nrho3(T):")
print(X)
print("column word", column_word(X))
print("matches the switching map:", X == rho_bss(T))
print("involution:", rho3(X) == T)

big = dilate(T, 5000)
print(f"\nthe fast diamond on a {big.shape.size}-cell dilation agrees with the slow one:",
      blacklozenge_fast(big) == blacklozenge_slow(big))
