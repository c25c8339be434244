"""Partitions, skew shapes and Yamanouchi words.

Run with ``python demos/01_shapes_and_words.py``.
"""
from lrsym.shapes import SkewShape, conjugate, complement, diamond_shape, partitions, rotate_shape
from lrsym.tableau import Tableau, column_word, recording_matrix, row_word, tau
from lrsym.words import Word, diamond, dualize, is_yamanouchi, u_of

lam, mu = (6, 4, 3), (2, 1)
s = SkewShape(lam, mu)
print("shape", s, "with", s.size, "cells in box", s.box)
print("conjugate of", lam, "is", conjugate(lam))
print("complement of", mu, "in the 3x6 box is", complement(mu, 3, 6))
print("rotated shape", rotate_shape(s), " diamond shape", diamond_shape(s))
print("partitions of 5:", list(partitions(5)))

T = Tableau.parse("..1111/.122/233")
print("\nT =")
print(T)
print("row word   ", row_word(T))
print("column word", column_word(T))
print("Yamanouchi?", is_yamanouchi(row_word(T)))
print("recording matrix", recording_matrix(T).dense())
print("tau(T) =", tau(T))

# the weight-conjugating operator on a Yamanouchi word
w = Word.parse("1122131")
print("\nw =", w, " diamond(w) =", diamond(w), " its dual =", dualize(diamond(w)))
print("U tableau of w:")
print(u_of(w))
