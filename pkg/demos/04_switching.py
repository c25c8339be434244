"""Tableau switching and the switching-based conjugation map."""
from lrsym.switching import rho_bss, switch, unique_in_classes
from lrsym.shapes import conjugate
from lrsym.tableau import Tableau, lr_weight, standardize, transpose_standard, yamanouchi_tableau

T = Tableau.parse("..1111/.122/233")
U = transpose_standard(standardize(T))
S = yamanouchi_tableau((2, 1))
print("inner tableau S:")
print(S)
print("outer tableau U:")
print(U)
a, b = switch(S, U)
print("\nafter switching, U moved inside:")
print(a)
print("and S moved to the cells", b.cells())
print("switching back restores the pair:", switch(a, b) == (S, U))

X = rho_bss(T)
print("\nconjugate LR tableau by switching:")
print(X)
print("as a class intersection:", unique_in_classes(yamanouchi_tableau(conjugate(lr_weight(T))), U) == X)
