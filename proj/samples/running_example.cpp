// Walks through the shape (4,4,4,2)/(2,1): its ribbon decomposition, the
// induced flags of every matrix entry, and three independent evaluations of
// the same flagged Schur function.

#include <ribbon_schur/hamel_goulden.hpp>
#include <ribbon_schur/lgv_oracle.hpp>
#include <ribbon_schur/tableaux.hpp>

#include <iostream>

using namespace ribbon_schur;

int main() {
    const RShape shape = RShape::usual({4, 4, 4, 2}, {2, 1});
    const FlagPair flags = parse_flags("a=1,0,-1,-2;b=6,6,5,5");
    const PipeVector pipe = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}};
    const OuterDecomposition d = pipe_to_decomposition(shape, pipe);

    std::cout << "shape " << shape.to_string() << "\nflags " << format_flags(flags) << "\npipe  "
              << format_pipe(pipe) << "\n";
    for (const Ribbon& r : d.ribbons()) std::cout << "  " << format_ribbon(r) << "\n";

    std::cout << "\ninduced flags (i, j): column flags | row flags of the conjugate\n";
    for (int i = 1; i <= d.size(); ++i) {
        for (int j = 1; j <= d.size(); ++j) {
            SharpResult sharp = d.sharp(i, j);
            std::cout << "  (" << i << "," << j << ") ";
            if (!sharp.is_shape()) {
                std::cout << (sharp.kind == SharpResult::Kind::EMPTY ? "empty" : "undefined") << "\n";
                continue;
            }
            FlagPair f = induced_flags(d, flags, i, j);
            std::cout << format_flags(f) << " | " << format_flags(conjugate_flags(sharp.shape, f)) << "\n";
        }
    }

    // The full flags above give a polynomial with many terms; a narrower
    // upper flag keeps the three evaluations quick.
    const FlagPair small = parse_flags("a=1,0,-1,-2;b=3,3,2,2");
    Polynomial tableaux = super_weight_sum(shape, small);
    Polynomial hg = hg_determinant(d, small);
    Polynomial jt = jacobi_trudi(shape, small);
    std::cout << "\nwith " << format_flags(small) << ":\n"
              << "  tableaux        " << tableaux.size() << " terms\n"
              << "  ribbon matrix   " << (hg == tableaux ? "agrees" : "DIFFERS") << "\n"
              << "  Jacobi-Trudi    " << (jt == tableaux ? "agrees" : "DIFFERS") << "\n";

    Lattice lattice = build_lattice(shape, pipe, small, false);
    std::vector<int> identity(lattice.size());
    for (int k = 0; k < lattice.size(); ++k) identity[k] = k;
    std::cout << "  lattice systems " << nonintersecting_systems(lattice, identity).count << " = "
              << count_zssyt(shape, small) << " tableaux\n";
    return hg == tableaux && jt == tableaux ? 0 : 1;
}
