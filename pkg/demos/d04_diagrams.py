"""
Morse words
===========

A diagram is a bottom-to-top list of cups, caps and crossings. Tracing the
strands yields components with Whitney degrees, blackboard framings and a
linking matrix.
"""

from hennings.diagram import (
    blowup,
    format_morse,
    linking_matrix,
    parse_morse,
    signature,
    trace_components,
    unknot,
    whitney_degree,
    writhe,
)
from hennings.fixtures import clasp_link, hopf_link


def describe(label, word):
    traces = trace_components(word)
    mat = linking_matrix(traces)
    info = [(whitney_degree(t), writhe(t, traces)) for t in traces]
    print(f"{label}: components (degree, framing) {info}, linking {[[int(x) for x in r] for r in mat]}, "
          f"sigma {signature(mat)}")


describe("circle", parse_morse("cup 0 / cap 0"))
describe("positive curl", parse_morse("cup 0 / xr 0 / cap 0"))
describe("Hopf link", hopf_link(0, 0))
describe("framed Hopf link", hopf_link(2, -1))
describe("clasp", clasp_link(2))
describe("3-framed unknot blown up", blowup(unknot(3), -1))

# %%
# Words round-trip through the text format.
print(format_morse(unknot(2)))
