#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descent/curve.hpp"
#include "descent/sieve.hpp"

namespace descent {

/// Coefficient family: curves y^2 = f(x) with deg f in the degree set and
/// integer coefficients in [lo, hi].
struct FamilySpec {
    std::vector<uint32_t> degrees;
    long lo = -1, hi = 1;
    std::optional<uint32_t> genus;
    bool dedupe = true;
};

enum class Classification {
    HasPoint,
    LocalObstruction,
    ElsUnresolved,
    SieveEmpty,
    SingularSkipped,
};

/// "HAS_POINT", "LOCAL_OBSTRUCTION", "ELS_UNRESOLVED", "SIEVE_EMPTY" or
/// "SINGULAR_SKIPPED".
std::string to_string(Classification c);
Classification classification_from_string(const std::string& s);

/// One census result. Equality ignores the timestamp.
struct CensusRecord {
    std::string id;  ///< comma-joined coefficients, constant term first
    Classification cls = Classification::ElsUnresolved;
    std::optional<RationalPoint> point;  ///< HasPoint: a verifying point
    std::string place;  ///< LocalObstruction: "real" or the prime
    std::string digest; ///< SieveEmpty: digest of the attached certificate
    uint32_t height = 0;
    std::string ts;

    bool operator==(const CensusRecord& o) const;
};

/// "f0,f1,...,fn" for the given model coefficients.
std::string census_curve_id(const std::vector<BigRat>& f);

/// One JSON object per record; census logs hold one per line.
std::string census_record_to_json_string(const CensusRecord& r);
CensusRecord census_record_from_json_string(const std::string& line);

/// Classify one curve: a found point, else the first failing place, else
/// unresolved (an attached sieve certificate may settle it later).
CensusRecord classify_one(const HyperellipticCurve& c, uint32_t H);

/// The family's coefficient tuples in enumeration order. With dedupe, only
/// the lexicographically least in-range tuple of each orbit under x -> -x
/// and (even degree, constant term nonzero) x -> 1/x is listed.
std::vector<std::vector<long>> family_tuples(const FamilySpec& spec);

/// Parsed log content in file order. A torn trailing line is dropped with
/// a warning on stderr (and the file truncated when repair is set); an
/// unreadable record before the last line throws LogCorruption.
std::vector<CensusRecord> census_load_log(const std::string& path,
                                          bool repair = false);

struct CensusSummary {
    uint64_t total = 0;                      ///< distinct ids, last record wins
    std::map<std::string, uint64_t> counts;  ///< per classification name
};

CensusSummary census_summary(const std::string& log_path);

/// Runs the family through search + local solvability, appending one record
/// per tuple to the log (fsync every 64 records). With resume, ids already
/// logged are kept as-is and skipped. Returns the summary over the final
/// log; on_record sees each newly computed record.
CensusSummary census_run(
    const FamilySpec& spec, uint32_t H, const std::string& log_path,
    bool resume = false,
    const std::function<void(const CensusRecord&)>& on_record = {});

/// Upgrades the ELS_UNRESOLVED record for id using an EMPTY sieve
/// certificate for the same curve, appending a superseding SIEVE_EMPTY
/// record. Re-attaching an identical certificate is a no-op that returns
/// the stored record.
CensusRecord attach_sieve_result(const std::string& log_path,
                                 const std::string& id,
                                 const SieveCertificate& cert);

} // namespace descent
