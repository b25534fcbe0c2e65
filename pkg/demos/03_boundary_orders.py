"""
Orders of boundary maps
=======================

The smallest multiple of (1, 0, 1) inside Im(Phi) bounds the order of the
boundary map from below.  The same lattice machinery gives the order of the
image of the k-th boundary map, compared here with its closed form.
"""

from sungauge.gauge_orders import (
    boundary_image_order,
    im_phi_lattice,
    reduced_phi_span,
    restricted_boundary_order,
)

# three generators already span the whole image
for n in range(3, 9):
    same = im_phi_lattice(n) == reduced_phi_span(n)
    print(f"n={n}: Im(Phi) basis {im_phi_lattice(n).rows()}  three-generator span equal: {same}")

# lower bounds, computed and closed form side by side
for n in range(3, 11):
    r = restricted_boundary_order(n)
    print(f"n={n:2d}  computed {r.computed:5d}  closed form {r.closed_form:5d}  agrees {r.agrees}")

# order of the image of the k-th boundary map for a few charges
for n, k in [(3, 1), (4, 1), (4, 6), (5, 10), (6, 35)]:
    r = boundary_image_order(n, k)
    print(f"n={n} k={k:2d}  order {r.computed}  closed form {r.closed_form}")
