#pragma once

namespace ltimes {

/// Outcome of a criterion that may be undecidable from the supplied data.
enum class Verdict { holds, fails, inconclusive };

const char* to_string(Verdict v);

} // namespace ltimes
