"""Walk through the bijection on a few small paths, printing every iteration.

Run with:  python demos/worked_examples.py
"""
from colored_motzkin import format_path, format_word, parse_path, phi_inv, phi_trace
from colored_motzkin.render import render_path, render_tableau

EXAMPLES = [
    (1, "U1 U1 L D1 L U1 D1 D1 U1 U1 D1 D1"),
    (2, "U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1"),
]


def show(d: int, text: str) -> None:
    path = parse_path(text)
    print(f"d={d}  {format_path(path)}")
    print(render_path(path))
    trace = phi_trace(path, d)
    for rec in trace.records:
        print("  " + rec.to_line())
    print(f"word: {format_word(trace.output)}")
    print(render_tableau(trace.output))
    # the inverse recovers the path
    assert phi_inv(trace.output, d) == path
    print()


if __name__ == "__main__":
    for d, text in EXAMPLES:
        show(d, text)
