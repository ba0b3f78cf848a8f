"""The cellular scalar s and its dependence on the right cap.

In D_2 the scalar of (^^,vv,vv) at vv is +1 against the cap vv and -1
against the cap ^^.  The dependence is a sign only, and a sign rescaling of
the basis removes it; the script counts both facts for small k.
"""

from arcalg import BasisVector, Weight, principal_block, s_scalar
from arcalg.checks import AxiomReport, check_s_independence, s_gauge

UU, VV = Weight("^^"), Weight("vv")


def main() -> None:
    v = BasisVector(UU, VV, VV)
    print(f"s({v}, vv) against cap vv: {s_scalar(v, VV, VV)}")
    print(f"s({v}, vv) against cap ^^: {s_scalar(v, VV, UU)}")
    for k in (2, 3, 4, 5):
        block = principal_block(k, 0)
        rep = AxiomReport(block)
        check_s_independence(rep, block)
        _, bad = s_gauge(block)
        print(f"k={k}: {len(rep.failures['s-independence'])} of {rep.checked['s-independence']} "
              f"(v, mu) depend on the cap; inconsistent rescaling relations: {bad}")


if __name__ == "__main__":
    main()
