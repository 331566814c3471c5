#include "descent/census.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "descent/errors.hpp"
#include "descent/localsolve.hpp"
#include "descent/search.hpp"

namespace descent {

namespace {

using nlohmann::json;

std::string now_iso8601() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<long> negate_odd_coeffs(const std::vector<long>& c) {
    std::vector<long> out = c;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
}

bool in_range(const std::vector<long>& c, long lo, long hi) {
    for (long v : c)
        if (v < lo || v > hi) return false;
    return true;
}

/// True when no lexicographically smaller in-range tuple lies in the orbit
/// of c under negation of x and, for even degree with nonzero constant
/// term, coefficient reversal.
bool is_canonical_tuple(const std::vector<long>& c, long lo, long hi) {
    std::vector<std::vector<long>> orbit{negate_odd_coeffs(c)};
    if (c.size() % 2 == 1 && c.front() != 0) {
        std::vector<long> rev(c.rbegin(), c.rend());
        orbit.push_back(negate_odd_coeffs(rev));
        orbit.push_back(std::move(rev));
    }
    for (const auto& o : orbit)
        if (in_range(o, lo, hi) && o < c) return false;
    return true;
}

void append_lines(const std::string& path,
                  const std::vector<std::string>& lines) {
    std::FILE* f = std::fopen(path.c_str(), "ab");
    if (!f) throw Error("cannot open log for appending: " + path);
    for (const auto& l : lines) {
        std::fputs(l.c_str(), f);
        std::fputc('\n', f);
    }
    std::fflush(f);
    fsync(fileno(f));
    std::fclose(f);
}

} // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::HasPoint: return "HAS_POINT";
        case Classification::LocalObstruction: return "LOCAL_OBSTRUCTION";
        case Classification::ElsUnresolved: return "ELS_UNRESOLVED";
        case Classification::SieveEmpty: return "SIEVE_EMPTY";
        case Classification::SingularSkipped: return "SINGULAR_SKIPPED";
    }
    return "ELS_UNRESOLVED";
}

Classification classification_from_string(const std::string& s) {
    if (s == "HAS_POINT") return Classification::HasPoint;
    if (s == "LOCAL_OBSTRUCTION") return Classification::LocalObstruction;
    if (s == "ELS_UNRESOLVED") return Classification::ElsUnresolved;
    if (s == "SIEVE_EMPTY") return Classification::SieveEmpty;
    if (s == "SINGULAR_SKIPPED") return Classification::SingularSkipped;
    throw ParseError("unknown classification: " + s);
}

bool CensusRecord::operator==(const CensusRecord& o) const {
    return id == o.id && cls == o.cls && point == o.point && place == o.place &&
           digest == o.digest && height == o.height;
}

std::string census_curve_id(const std::vector<BigRat>& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += to_string(f[i]);
    }
    return out;
}

std::string census_record_to_json_string(const CensusRecord& r) {
    json j;
    j["id"] = r.id;
    j["class"] = to_string(r.cls);
    j["height"] = r.height;
    if (r.point) j["point"] = json::parse(point_to_json_string(*r.point));
    if (!r.place.empty()) j["place"] = r.place;
    if (!r.digest.empty()) j["digest"] = r.digest;
    j["ts"] = r.ts;
    return j.dump();
}

CensusRecord census_record_from_json_string(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON record: ") + e.what());
    }
    try {
        CensusRecord r;
        r.id = j.at("id").get<std::string>();
        r.cls = classification_from_string(j.at("class").get<std::string>());
        r.height = j.at("height").get<uint32_t>();
        if (j.contains("point"))
            r.point = point_from_json_string(j.at("point").dump());
        r.place = j.value("place", "");
        r.digest = j.value("digest", "");
        r.ts = j.value("ts", "");
        return r;
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
}

CensusRecord classify_one(const HyperellipticCurve& c, uint32_t H) {
    CensusRecord r;
    r.id = census_curve_id(c.f);
    r.height = H;
    r.ts = now_iso8601();
    std::vector<RationalPoint> pts = point_search(c, H);
    if (!pts.empty()) {
        r.cls = Classification::HasPoint;
        r.point = pts.front();
        return r;
    }
    auto [els, verdicts] = is_els(c);
    if (!els) {
        r.cls = Classification::LocalObstruction;
        for (const auto& v : verdicts)
            if (!v.solvable) {
                r.place = v.is_real_place ? "real" : std::to_string(v.p);
                break;
            }
        return r;
    }
    r.cls = Classification::ElsUnresolved;
    return r;
}

std::vector<std::vector<long>> family_tuples(const FamilySpec& spec) {
    if (spec.lo > spec.hi) throw ParseError("empty coefficient range");
    std::vector<uint32_t> degs = spec.degrees;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    if (degs.empty()) throw ParseError("no degrees selected");
    for (uint32_t n : degs) {
        if (n < 3 || n > 6)
            throw ParseError("degrees must lie within 3..6");
        if (spec.genus && (n - 1) / 2 != *spec.genus)
            throw ParseError("degree inconsistent with the genus filter");
    }

    std::vector<std::vector<long>> out;
    for (uint32_t n : degs) {
        std::vector<long> c(n + 1, spec.lo);
        for (;;) {
            if (c[n] != 0 &&
                (!spec.dedupe || is_canonical_tuple(c, spec.lo, spec.hi)))
                out.push_back(c);
            std::size_t i = c.size();
            for (;;) {
                if (i == 0) goto next_degree;
                --i;
                if (++c[i] <= spec.hi) break;
                c[i] = spec.lo;
            }
        }
    next_degree:;
    }
    return out;
}

std::vector<CensusRecord> census_load_log(const std::string& path,
                                          bool repair) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    in.close();

    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= content.size(); ++i) {
        if (i == content.size() || content[i] == '\n') {
            if (i > start) lines.emplace_back(start, content.substr(start, i - start));
            start = i + 1;
        }
    }

    std::vector<CensusRecord> out;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        try {
            out.push_back(census_record_from_json_string(lines[li].second));
        } catch (const Error&) {
            if (li + 1 == lines.size()) {
                std::fprintf(stderr,
                             "warning: dropping torn trailing record in %s\n",
                             path.c_str());
                if (repair)
                    std::filesystem::resize_file(path, lines[li].first);
                break;
            }
            throw LogCorruption("unreadable record at line " +
                                std::to_string(li + 1) + " of " + path);
        }
    }
    return out;
}

CensusSummary census_summary(const std::string& log_path) {
    if (!std::filesystem::exists(log_path))
        throw Error("log not found: " + log_path);
    std::map<std::string, CensusRecord> last;
    for (auto& r : census_load_log(log_path)) last[r.id] = std::move(r);
    CensusSummary s;
    s.total = last.size();
    for (const auto& [id, r] : last) {
        (void)id;
        ++s.counts[to_string(r.cls)];
    }
    return s;
}

CensusSummary census_run(
    const FamilySpec& spec, uint32_t H, const std::string& log_path,
    bool resume,
    const std::function<void(const CensusRecord&)>& on_record) {
    std::map<std::string, CensusRecord> done;
    if (resume) {
        for (auto& r : census_load_log(log_path, true)) done[r.id] = std::move(r);
    } else {
        std::ofstream create(log_path, std::ios::binary | std::ios::trunc);
        if (!create) throw Error("cannot open log for writing: " + log_path);
    }

    std::vector<std::string> batch;
    for (const auto& tuple : family_tuples(spec)) {
        std::vector<BigRat> fco;
        fco.reserve(tuple.size());
        for (long v : tuple) fco.emplace_back(v);
        std::string id = census_curve_id(fco);
        if (done.count(id)) continue;

        CensusRecord rec;
        try {
            rec = classify_one(new_curve(fco), H);
        } catch (const NotSquarefree&) {
            rec.id = id;
            rec.cls = Classification::SingularSkipped;
            rec.height = H;
            rec.ts = now_iso8601();
        }
        batch.push_back(census_record_to_json_string(rec));
        if (batch.size() >= 64) {
            append_lines(log_path, batch);
            batch.clear();
        }
        if (on_record) on_record(rec);
        done[rec.id] = std::move(rec);
    }
    if (!batch.empty()) append_lines(log_path, batch);

    CensusSummary s;
    s.total = done.size();
    for (const auto& [id, r] : done) {
        (void)id;
        ++s.counts[to_string(r.cls)];
    }
    return s;
}

CensusRecord attach_sieve_result(const std::string& log_path,
                                 const std::string& id,
                                 const SieveCertificate& cert) {
    if (!std::filesystem::exists(log_path))
        throw Error("log not found: " + log_path);
    std::map<std::string, CensusRecord> last;
    for (auto& r : census_load_log(log_path, true)) last[r.id] = std::move(r);
    auto it = last.find(id);
    if (it == last.end())
        throw RecordNotFound("no census record for id " + id);
    std::string cert_id = census_curve_id(cert.problem.curve.f);
    if (cert_id != id)
        throw CurveMismatch("certificate curve " + cert_id +
                            " does not match record " + id);
    if (cert.outcome != "EMPTY")
        throw ClassificationConflict("certificate outcome is " + cert.outcome +
                                     ", not EMPTY");
    const CensusRecord& cur = it->second;
    if (cur.cls == Classification::SieveEmpty) {
        if (cur.digest == cert.digest) return cur;
        throw ClassificationConflict(
            "record already carries a different certificate digest");
    }
    if (cur.cls != Classification::ElsUnresolved)
        throw ClassificationConflict("record is " + to_string(cur.cls) +
                                     ", not ELS_UNRESOLVED");
    CensusRecord up = cur;
    up.cls = Classification::SieveEmpty;
    up.digest = cert.digest;
    up.point.reset();
    up.place.clear();
    up.ts = now_iso8601();
    append_lines(log_path, {census_record_to_json_string(up)});
    return up;
}

} // namespace descent
