"""Hom dimensions between projectives in the principal block of SOSP(3|2).

P(i) is labelled by the partition (i, 1^(i-1)).  Neighbours P(i), P(i+1)
are linked for i >= 1, and P(0) is linked to P(2) rather than to P(1).
"""

from arcalg import supergroup as sg


def main() -> None:
    parts = [sg.sosp32_partition(i) for i in range(7)]
    print("      " + " ".join(f"P({j})" for j in range(7)))
    for i, a in enumerate(parts):
        row = " ".join(f"{sg.hom_dim(a, b):4d}" for b in parts)
        print(f"P({i})  {row}    {a}  ->  {sg.super_weight(a)}")


if __name__ == "__main__":
    main()
