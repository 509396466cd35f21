#pragma once

#include "contlab/compose.hpp"
#include "contlab/zoo.hpp"

namespace contlab {

// Parsed batch input: a container, a structured container, a law, or a
// composite structure together with its carriers.
struct Document {
    enum class Kind { Container, Monadic, Directed, Law, Composite };
    Kind kind = Kind::Container;

    Container container;
    MonadicContainer monadic;
    DirectedContainer directed;
    DistLawData law;
    MonadicContainer comp_outer, comp_inner;  // carriers of a composite document
    std::string outer_ref, inner_ref;         // original refs, kept for printing
};

// Parses and validates a JSON document; diagnostics name the first schema
// violation with its path.
Document parse_document(const std::string& text);

std::string print_document(const Document& doc);

// Resolves a builtin name ("writer:z2", "exception-law:1/writer:z2", ...), a
// file path, or an inline JSON object.
Document resolve_ref(const std::string& ref, Idx default_fuel = 3);

// Builtin names, one per line, for the catalogue listing.
std::string builtin_catalogue();

Document document_of_monadic(MonadicContainer m);
Document document_of_directed(DirectedContainer d);
Document document_of_law(DistLawData law);
Document document_of_composite(const CompatibleComposite& comp, MonadicContainer outer,
                               MonadicContainer inner, std::string outer_ref,
                               std::string inner_ref);

// The structured payloads, with flavor checks.
MonadicContainer monadic_of(const Document& doc);
DirectedContainer directed_of(const Document& doc);

} // namespace contlab
