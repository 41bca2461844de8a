#pragma once

// Known existence status of SRG parameter sets, loaded from a line-oriented
// text file: `v k lambda mu status source`, status in {E, N, O}, `#` comments.

#include "eqlines/srg.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace eqlines {

enum class SrgStatus { Exists, NotExists, Open };

inline std::string_view to_string(SrgStatus s)
{
    switch (s) {
    case SrgStatus::Exists:
        return "Exists";
    case SrgStatus::NotExists:
        return "NotExists";
    case SrgStatus::Open:
        return "Open";
    }
    return "?";
}

inline SrgStatus parse_srg_status(std::string_view s)
{
    if (s == "E" || s == "Exists")
        return SrgStatus::Exists;
    if (s == "N" || s == "NotExists")
        return SrgStatus::NotExists;
    if (s == "O" || s == "Open")
        return SrgStatus::Open;
    throw DomainError("unknown SRG status '" + std::string(s) + "'");
}

struct SrgRecord {
    SrgParams params;
    SrgStatus status = SrgStatus::Open;
    std::string source;
    bool via_complement = false; // the stored fact concerns complement(params)
};

/// Primitive facts imported from the literature.
inline constexpr std::string_view kSeedDatabase = R"(# v k lambda mu status source
75 32 10 16 N aza15
95 40 12 20 N aza16
540 308 190 156 N paper-Table1
1127 640 396 320 N Brouwer-table
1128 644 400 324 N Brouwer-table
5 2 0 1 E pentagon
9 4 1 2 E Paley9
10 3 0 1 E Petersen
27 10 1 5 E Schlafli-complement
275 112 30 56 E McLaughlin
)";

class DatabaseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Immutable after loading; safe for concurrent readers.
class SrgDatabase {
public:
    SrgDatabase() = default;

    static SrgDatabase parse(std::istream& in)
    {
        SrgDatabase db;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            std::istringstream fields(line);
            SrgRecord rec;
            std::string status;
            if (!(fields >> rec.params.v))
                continue; // blank or comment-only line
            if (!(fields >> rec.params.k >> rec.params.lambda >> rec.params.mu >> status >> rec.source))
                throw DatabaseError("database line " + std::to_string(line_no) + ": expected `v k lambda mu status source`");
            rec.status = parse_srg_status(status);
            if (!in_range(rec.params))
                throw DatabaseError("database line " + std::to_string(line_no) + ": " + rec.params.str() +
                                    " out of range");
            if (rec.status != SrgStatus::Open && rec.source.empty())
                throw DatabaseError("database line " + std::to_string(line_no) + ": missing source");
            db.records_[rec.params] = rec;
        }
        return db;
    }

    static SrgDatabase parse(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        return parse(in);
    }

    static SrgDatabase load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw DatabaseError("cannot open database '" + path + "'");
        return parse(in);
    }

    static const SrgDatabase& seed()
    {
        static const SrgDatabase db = parse(kSeedDatabase);
        return db;
    }

    /// Record for p, or for its complement (statuses transfer); Open otherwise.
    SrgRecord lookup(const SrgParams& p) const
    {
        if (auto it = records_.find(p); it != records_.end())
            return it->second;
        try {
            SrgParams c = complement(p);
            if (auto it = records_.find(c); it != records_.end()) {
                SrgRecord rec = it->second;
                rec.params = p;
                rec.via_complement = true;
                return rec;
            }
        } catch (const DomainError&) {
        }
        return SrgRecord{p, SrgStatus::Open, "", false};
    }

    std::size_t size() const { return records_.size(); }

private:
    std::map<SrgParams, SrgRecord> records_;
};

} // namespace eqlines
