"""Walk through the even principal block of type D_4.

Prints the weights with their cup diagrams, the Cartan and decomposition
matrices, the quiver edges and one signed product.
"""

from arcalg import BasisVector, Weight, cartan_matrix, cup_diagram, decomposition_matrix, principal_block, quiver
from arcalg import multiply_basis, weights_in_block
from arcalg.algebra import graded_dimension


def main() -> None:
    block = principal_block(4, 0)
    for i, w in enumerate(weights_in_block(block), start=1):
        print(f"lambda_{i} = {w}   {cup_diagram(w).text()}")
    print()
    print("graded dimension:", graded_dimension(block))
    print()
    print(cartan_matrix(block).ascii())
    print(decomposition_matrix(block).ascii())
    q = quiver(block)
    print("quiver edges:", sorted(q.index_edges()))
    x = BasisVector(Weight("vv^^"), Weight("v^v^"), Weight("v^v^"))
    y = BasisVector(Weight("v^v^"), Weight("v^v^"), Weight("vv^^"))
    print(f"{x} * {y} = {multiply_basis(x, y)}")


if __name__ == "__main__":
    main()
