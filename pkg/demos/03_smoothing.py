"""Smoothing, subdivision and the smooth ancestor of a structure."""

from bident import apply_sequence, d_from_r, smooth_ancestor, smooth_at, subdivide_at
from bident.transform import SubdivisionSequence, canonicalize_sequence, descendants, count_descendants

s = d_from_r(6, (7, 2, 14, 5, 6, 1))
print("start      ", s.d, s.r)
t = smooth_at(s, 2)  # v_2 has d = 1
print("smooth at 2", t.d, t.r)
print("subdivide  ", subdivide_at(t, 2) == s)

# three different orders of subdivision, one result
base = d_from_r(4, (3, 1, 6, 2))
for seq in [(2, 2, 1), (2, 1, 3), (1, 3, 3)]:
    print(seq, "->", apply_sequence(base, seq).r)
print("canonical form of (2, 2, 1):", canonicalize_sequence(SubdivisionSequence(4, (2, 2, 1))).b)

# walking back down to the smooth ancestor
end = apply_sequence(base, (1, 3, 3))
anc, seq = smooth_ancestor(end)
print("ancestor", anc.r, "sequence", seq.b)

# each smooth structure on D_m has a ballot number of descendants on D_n
kids = list(descendants(base, 8))
print(f"{len(kids)} descendants on D_8, formula says {count_descendants(4, 8)}")
