"""Build a few digraphs and read off their structural invariants.

The running example is the Toeplitz digraph: a loop e at v plus an arrow
f: v -> w into a sink.
"""

from leavitt import Digraph

toeplitz = Digraph(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])

print("vertices:", toeplitz.vertices)
print("separation (default):", toeplitz.separation)
print("sinks:", toeplitz.sinks())

cycles = toeplitz.cycles()
print("cycles:", [(c.anchor, c.arrows) for c in cycles])
print("exits of the loop:", toeplitz.exits(cycles[0]))
print("predecessors of w:", toeplitz.predecessors("w"))

# The loop reaches the sink, so only the cycle is maximal.
for m in toeplitz.maximal_sinks_and_cycles():
    print(f"maximal {m.kind} at {m.anchor_vertex}, {m.predecessor_count} predecessor(s)")

# Subgraphs: {v} with the loop is full, cohereditary and colorful -- exactly
# the support subgraphs of modules.
flags = toeplitz.subgraph_flags({"v"}, {"e"})
print("flags of ({v}, {e}):", flags)

sub = toeplitz.induced_subgraph({"v"})
print("induced subgraph on {v}:", sub.to_dict())

# A separated digraph: the same arrow set, but each arrow in its own part.
separated = Digraph(
    ["v", "w"],
    [("e", "v", "v"), ("f", "v", "w")],
    separation=[["e"], ["f"]],
)
print("separated?", separated.is_separated)
