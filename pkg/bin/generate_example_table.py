"""
Utility script to generate docs/example_table.rst
"""
import os
import sys

sys.path.insert(0, os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..')))

# pylint: disable=wrong-import-position
from spoverma.algebra import Shape
from spoverma.verma import enumerate_b, tableau_of_b, verma_weight


def example_rows(shape: Shape) -> list[tuple[str, str, str]]:
    """
    :return: one ``(b, weight, tableau)`` triple of display strings per valid b-vector of
        ``shape``, in lexicographic order of b, e.g. ``("(1,2,3,1)", "(0,1)", "1 0 -1 / 2 0")``.
    """
    rows = []
    for b in enumerate_b(shape):
        t = tableau_of_b(b, shape)
        tableau = ' '.join(x.text for x in t.row1)
        if t.row2:
            tableau += ' / ' + ' '.join(x.text for x in t.row2)
        rows.append((f'({b})', str(verma_weight(b, shape)), tableau))
    return rows


def generate_example_table_rst(shape: Shape = Shape.from_dynkin(1, 4), filename='example_table.rst'):
    """
    Write a reST page listing every Verma vector of L(λ) for ``shape`` with its weight and
    KN tableau. The default is λ = ω1 + 4ω2, i.e. the shape (3,2).

    :param shape: the highest weight
    :param filename: the file in the docs dir in which the output will be saved
    """

    # get absolute filepath in the docs dir
    curr_dir = os.path.dirname(os.path.abspath(__file__))
    filepath = os.path.normpath(os.path.join(curr_dir, '..', 'docs', filename))

    print(f"generating {filepath}")

    m1, m2 = shape.m1, shape.m2
    rows = example_rows(shape)
    title = f'Verma basis of L({shape.l1}ε1 + {shape.l2}ε2)'
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write('.. generated with bin/generate_example_table.py, do not edit manually.\n\n')
        f.write(f'{title}\n{"=" * len(title)}\n\n')
        f.write(f'For m1 = {m1} and m2 = {m2} the exponents of f1^b4 f2^b3 f1^b2 f2^b1 v_λ range over\n\n')
        f.write(f'- 0 ≤ b1 ≤ {2 * m2}\n'
                f'- 0 ≤ b2 ≤ {m1} + b1\n'
                f'- 0 ≤ b3 ≤ min(b2 + {m1}, 2·b2)\n'
                f'- 0 ≤ b4 ≤ min({m1}, b3/2)\n\n')
        f.write(f'which gives {len(rows)} Verma vectors, one per KN tableau.\n\n')
        f.write('.. list-table::\n'
                '   :header-rows: 1\n\n'
                '   * - b\n'
                '     - weight\n'
                '     - KN tableau (row 1 / row 2)\n')
        for b, weight, tableau in rows:
            f.write(f'   * - {b}\n'
                    f'     - {weight}\n'
                    f'     - ``{tableau}``\n')

    print(f"done generating {filepath}")


if __name__ == '__main__':
    generate_example_table_rst()
