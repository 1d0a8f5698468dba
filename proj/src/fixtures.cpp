#include "vmosaic/fixtures.hpp"

#include "vmosaic/errors.hpp"
#include "vmosaic/indexpoly.hpp"
#include "vmosaic/mosaic.hpp"
#include "vmosaic/surface.hpp"
#include "vmosaic/trace.hpp"

#include <fstream>
#include <sstream>

namespace vmosaic {

std::vector<FixtureRecord> load_manifest(const std::string& dir) {
    const std::string path = dir + "/manifest.txt";
    std::ifstream in(path);
    if (!in) throw FixtureMissing("cannot read " + path);

    std::vector<FixtureRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        FixtureRecord rec;
        std::string crossings, genus, poly;
        if (!(row >> rec.name)) continue; // blank line
        if (!(row >> rec.file >> crossings >> genus >> poly))
            throw SyntaxError(path + ":" + std::to_string(lineno) + ": expected 5 fields");
        try {
            rec.crossings = std::stoi(crossings);
        } catch (const std::exception&) {
            throw SyntaxError(path + ":" + std::to_string(lineno) + ": bad crossing count");
        }
        if (genus != "-") {
            try {
                rec.genus = std::stoi(genus);
            } catch (const std::exception&) {
                throw SyntaxError(path + ":" + std::to_string(lineno) + ": bad genus");
            }
        }
        if (poly != "-") rec.poly = poly;
        records.push_back(std::move(rec));
    }
    return records;
}

FixtureReport check_fixtures(const std::string& dir) {
    FixtureReport report;
    for (const auto& rec : load_manifest(dir)) {
        ++report.checked;
        const auto fail = [&](const std::string& what) {
            report.failures.push_back(rec.name + ": " + what);
        };

        const std::string path = dir + "/" + rec.file;
        std::ifstream in(path);
        if (!in) {
            fail("missing file " + path);
            continue;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();

        try {
            const Mosaic mo = parse_mosaic(buffer.str());
            const auto validation = validate(mo);
            if (!validation.valid()) {
                fail("invalid: " + validation.violations.front().message);
                continue;
            }
            const auto tr = trace(mo);
            if (tr.components != 1)
                fail("components=" + std::to_string(tr.components) + ", expected 1");
            if (tr.crossings != rec.crossings)
                fail("crossings=" + std::to_string(tr.crossings) + ", expected " +
                     std::to_string(rec.crossings));
            if (rec.genus) {
                const auto surf = genus(mo);
                if (surf.genus != *rec.genus)
                    fail("genus=" + std::to_string(surf.genus) + ", expected " +
                         std::to_string(*rec.genus));
            }
            if (rec.poly) {
                const std::string got = to_string(index_polynomial(mo));
                if (got != *rec.poly) fail("poly=" + got + ", expected " + *rec.poly);
            }
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    return report;
}

void require_fixtures(const std::string& dir) {
    const auto report = check_fixtures(dir);
    if (report.ok()) return;
    std::string message = std::to_string(report.failures.size()) + " fixture mismatch(es):";
    for (const auto& failure : report.failures) message += "\n  " + failure;
    throw FixtureMismatch(message);
}

} // namespace vmosaic
