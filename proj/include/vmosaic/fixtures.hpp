#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vmosaic {

// One manifest row: "name file crossings genus poly" with '-' for fields the
// row does not pin down.
struct FixtureRecord {
    std::string name;
    std::string file; // relative to the fixture directory
    int crossings = 0;
    std::optional<int> genus;
    std::optional<std::string> poly; // expected to_string(index_polynomial)
};

// Parses <dir>/manifest.txt. Throws FixtureMissing when the manifest is
// absent, SyntaxError on a malformed row.
std::vector<FixtureRecord> load_manifest(const std::string& dir);

struct FixtureReport {
    int checked = 0;
    std::vector<std::string> failures; // one line per mismatch, itemized
    bool ok() const { return failures.empty(); }
};

// Validates every fixture, traces it, and compares component count (must be
// 1), crossing count, genus, and polynomial against the manifest. Collects
// failures instead of stopping at the first.
FixtureReport check_fixtures(const std::string& dir);

// check_fixtures + throws FixtureMismatch itemizing every failure.
void require_fixtures(const std::string& dir);

} // namespace vmosaic
