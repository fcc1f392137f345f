#pragma once

#include <nlohmann/json.hpp>

#include "typea/diagrams.hpp"
#include "typea/oracle.hpp"
#include "typea/symreps.hpp"
#include "typea/unipotent.hpp"
#include "typea/weylmodules.hpp"

namespace typea {

// JSON forms of every result type. Keys are emitted in sorted order and
// multiplicity entries in decreasing lex order, so output is canonical.

using Json = nlohmann::json;

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

/// {"shape":[...],"mults":[{"key":[[...],...],"m":k},...]}
Json to_json(const ModuleDecomp& m);
ModuleDecomp module_from_json(const Json& j);

/// {"kind":"su","p":1,"q":1} or {"kind":"sl-r","n":4}
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

/// {"group", "orbit", ["orbit2"], "n_h", "n_0", "count", "method"}
Json to_json(const CountResult& r);
CountResult count_result_from_json(const Json& j);

Json to_json(const InducedRepDescriptor& d);
InducedRepDescriptor descriptor_from_json(const Json& j);

/// {"group", "orbit", "parameters":[{"index", "a", "blocks", "label"}]}
Json to_json(const Enumeration& e);
Enumeration enumeration_from_json(const Json& j);

Json to_json(const CellRep& c);
CellRep cell_from_json(const Json& j);

Json to_json(const CoherentResult& r);
CoherentResult coherent_from_json(const Json& j);

/// Same layout as the on-disk character table cache.
Json to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j);

/// {"all_passed", "records":[{"check","instance","expected","actual","pass"}]}
Json to_json(const oracle::VerificationReport& r);
oracle::VerificationReport report_from_json(const Json& j);

}  // namespace typea
