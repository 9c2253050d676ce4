#ifndef PRELIE_IO_HPP
#define PRELIE_IO_HPP

#include "prelie/deformations.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace prelie::io {

using json = nlohmann::ordered_json;

/// A JSON node together with the directory that relative references in it
/// resolve against.
struct Node {
    json value;
    std::filesystem::path base;
};

/// Throws Parse on unreadable or malformed files.
Node load_file(const std::filesystem::path& path);
/// Follows a string reference (path relative to `parent.base`) or returns the
/// inline object unchanged.
Node resolve(const json& ref, const std::filesystem::path& base);

json scalar_to_json(const Scalar& s);
/// Accepts "p/q" strings and JSON integers.
Scalar scalar_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

/// Product list [{"i":1,"j":2,"out":{"1":"1/2"}}, ...], 1-based, zeros omitted.
json products_to_json(const StructureTensor& t);
StructureTensor products_from_json(const json& j, std::size_t dim);

/// Raw algebra file contents, before any identity is checked.
struct AlgebraFile {
    StructureTensor product;
    Flavor flavor = Flavor::Unchecked;
    std::vector<std::string> basis;
};
AlgebraFile algebra_file_from_json(const json& j);
/// Verifies the declared flavor (throws NotPreLie / NotLie / NotCommAssoc).
Algebra algebra_from_json(const json& j);
json algebra_to_json(const Algebra& a);
Flavor flavor_from_string(const std::string& s);

/// {"algebra": ref, "space_dim": m, "rho": [...], "mu": [...]} or
/// {"algebra": ref, "kind": "regular" | "coregular" | "trivial", "space_dim"?}.
Representation representation_from_json(const Node& n);
json representation_to_json(const Representation& r);

/// {"g": ref, "h": ref, "phi": Mat}; algebras are read as pre-Lie.
struct TripleFile {
    AlgebraFile g;
    AlgebraFile h;
    Mat phi;
};
TripleFile triple_file_from_json(const Node& n);
MorphismTriple triple_from_json(const Node& n);
json triple_to_json(const MorphismTriple& t);

/// {"triple": ref, "omega": products, "varpi": products, "theta": Mat}. When
/// `fallback` is given it supplies the triple if the file has none.
DeformationGenerator generator_from_json(const Node& n, const MorphismTriple* fallback = nullptr);
json generator_to_json(const DeformationGenerator& gen, bool embed_triple = true);

/// {"triple": ref, "N": Mat, "S": Mat}.
NijenhuisPair pair_from_json(const Node& n, const MorphismTriple* fallback = nullptr);
json pair_to_json(const NijenhuisPair& p);

json cochain_to_json(const Cochain& c);
json verdict_to_json(const Verdict& v);
json certificates_to_json(const std::vector<Certificate>& certs);

void write_file(const std::filesystem::path& path, const json& j);

}  // namespace prelie::io

#endif
