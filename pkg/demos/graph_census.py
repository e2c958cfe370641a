"""Census of trivalent graphs by genus.

Cutting a genus-g surface along 3g-3 curves leaves 2g-2 three-holed spheres;
the gluing pattern is a connected trivalent multigraph.  generate_trivalent
lists one representative per isomorphism class, loops and parallel edges
included.
"""

from bsq.trigraph import bridges, generate_trivalent, graph_to_text


def main():
    for g in (2, 3, 4):
        graphs = generate_trivalent(g)
        print(f"genus {g}: {len(graphs)} classes "
              f"({graphs[0].vertex_count} vertices, {len(graphs[0].edges)} edges each)")
        for i, graph in enumerate(graphs):
            loops = sum(1 for a, b in graph.edges if a == b)
            cut = sorted(bridges(graph))
            tag = f" bridges at {cut}" if cut else ""
            print(f"  [{i}] edges={graph.edges} loops={loops}{tag}")
        print()

    print("the two genus-2 shapes in the text format used by the tool:")
    for graph in generate_trivalent(2):
        print(graph_to_text(graph))


if __name__ == "__main__":
    main()
