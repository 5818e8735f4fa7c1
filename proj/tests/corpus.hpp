#pragma once

// Shared cross-section of groups used by the property suite: abelian and
// dihedral families, symmetric/alternating groups, projective-line and
// linear groups, affine Frobenius groups, direct products, and the two
// constructed benchmark groups.  Built once; the contained groups keep
// their lazily computed lattices and class data alive across test cases.

#include <string>
#include <utility>
#include <vector>

#include "permlab/constructions.hpp"

namespace corpus {

struct Entry {
    std::string name;
    permlab::PermGroup group;
};

inline const std::vector<Entry>& groups() {
    static const std::vector<Entry> all = [] {
        using namespace permlab;
        std::vector<Entry> v;
        auto add = [&v](std::string name, PermGroup g) {
            v.push_back(Entry{std::move(name), std::move(g)});
        };

        add("C1", cyclic_group(1));
        add("C2", cyclic_group(2));
        add("C3", cyclic_group(3));
        add("C6", cyclic_group(6));
        add("C7", cyclic_group(7));
        add("C12", cyclic_group(12));
        add("C15", cyclic_group(15));
        add("C60", cyclic_group(60));
        add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
        add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));

        add("D6", dihedral_group(6));
        add("D8", dihedral_group(8));
        add("D10", dihedral_group(10));
        add("D12", dihedral_group(12));
        add("D16", dihedral_group(16));
        add("D20", dihedral_group(20));
        add("D24", dihedral_group(24));

        add("Sym(3)", symmetric_group(3));
        add("Sym(4)", symmetric_group(4));
        add("Sym(5)", symmetric_group(5));
        add("Sym(6)", symmetric_group(6));
        add("Alt(4)", alternating_group(4));
        add("Alt(5)", alternating_group(5));
        add("Alt(6)", alternating_group(6));

        add("PSL(2,4)", psl2(4));
        add("PSL(2,5)", psl2(5));
        add("PSL(2,7)", psl2(7));
        add("PSL(2,8)", psl2(8));
        add("PSL(2,9)", psl2(9));
        add("PSL(2,11)", psl2(11));
        add("PSL(2,13)", psl2(13));
        add("PGL(2,7)", pgl2(7));
        add("PGL(2,11)", pgl2(11));
        add("PSL(3,2)", psl(3, 2));
        add("PSL(3,3)", psl(3, 3));
        add("SL(2,7)", sl2_on_vectors(7));
        add("SL(2,11)", sl2_on_vectors(11));

        add("Ex72_43", example_group_72_43());
        add("Ex324_160", example_group_324_160());

        add("C5:C4", modular_affine_group(5, 2));
        add("C7:C3", modular_affine_group(7, 2));
        add("C11:C5", modular_affine_group(11, 3));
        add("C31:C5", modular_affine_group(31, 2));

        add("C3xAlt(4)", direct_product(cyclic_group(3), alternating_group(4)));
        add("C3xAlt(5)", direct_product(cyclic_group(3), alternating_group(5)));
        add("PSL(2,7)xC5", direct_product(psl2(7), cyclic_group(5)));
        return v;
    }();
    return all;
}

}  // namespace corpus
