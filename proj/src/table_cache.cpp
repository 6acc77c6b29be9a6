#include "injscheme/table_cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace injscheme {

namespace {

using nlohmann::json;

json payload_json(const CharacterTable& ct) {
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["k"] = ct.k;
    j["n"] = ct.n;
    j["point_count"] = to_dec(ct.point_count);
    json classes = json::array();
    for (int i = 0; i < ct.size(); ++i) {
        const auto& cls = ct.classes[static_cast<std::size_t>(i)];
        json c;
        c["cycles"] = cls.cycles.parts();
        c["paths"] = cls.paths.parts();
        c["valency"] = to_dec(ct.valencies[static_cast<std::size_t>(i)]);
        c["distance"] = class_distance(cls, ct.k);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    json irreps = json::array();
    for (const auto& ir : ct.irreps) {
        json r;
        r["mu"] = ir.mu.parts();
        r["lambda"] = ir.lambda.parts();
        r["multiplicity"] = to_dec(ir.multiplicity);
        irreps.push_back(std::move(r));
    }
    j["irreps"] = std::move(irreps);
    json p = json::array();
    for (const auto& row : ct.p) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_dec(e));
        p.push_back(std::move(r));
    }
    j["p"] = std::move(p);
    return j;
}

std::string checksum_of(const json& payload) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(payload.dump())));
    return std::string("fnv1a64:") + buf;
}

Partition partition_from(const json& arr) {
    std::vector<int> parts;
    for (const auto& e : arr) parts.push_back(e.get<int>());
    return Partition{std::move(parts)};
}

}  // namespace

std::string serialize_table(const CharacterTable& ct) {
    json payload = payload_json(ct);
    json full = payload;
    full["checksum"] = checksum_of(payload);
    return full.dump(1) + "\n";
}

CharacterTable parse_table(const std::string& text) {
    json full;
    try {
        full = json::parse(text);
    } catch (const json::exception& e) {
        throw CacheError(std::string("cache parse error: ") + e.what());
    }
    try {
        if (full.at("format_version").get<int>() != kCacheFormatVersion)
            throw CacheError("cache format version mismatch");
        std::string stored = full.at("checksum").get<std::string>();
        json payload = full;
        payload.erase("checksum");
        if (checksum_of(payload) != stored) throw CacheError("cache checksum mismatch");

        CharacterTable ct;
        ct.k = full.at("k").get<int>();
        ct.n = full.at("n").get<int>();
        ct.point_count = int_from_dec(full.at("point_count").get<std::string>());
        if (ct.point_count != injection_count(ct.k, ct.n))
            throw CacheError("cache point count inconsistent with (k, n)");
        const auto& classes = full.at("classes");
        const auto& irreps = full.at("irreps");
        const auto& p = full.at("p");
        const std::size_t d = classes.size();
        if (irreps.size() != d || p.size() != d) throw CacheError("cache dimension mismatch");
        for (const auto& c : classes) {
            Partition cycles = partition_from(c.at("cycles"));
            Partition paths = partition_from(c.at("paths"));
            CyclePathType cls{cycles, paths, ct.n - ct.k - paths.length()};
            if (!cls.valid_for(ct.k, ct.n)) throw CacheError("cache class invalid for (k, n)");
            if (c.at("distance").get<int>() != class_distance(cls, ct.k))
                throw CacheError("cache class distance inconsistent");
            ct.classes.push_back(std::move(cls));
            ct.valencies.push_back(int_from_dec(c.at("valency").get<std::string>()));
        }
        for (const auto& r : irreps) {
            IrrepLabel ir{partition_from(r.at("mu")), partition_from(r.at("lambda")),
                          int_from_dec(r.at("multiplicity").get<std::string>())};
            ct.irreps.push_back(std::move(ir));
        }
        for (const auto& row : p) {
            if (row.size() != d) throw CacheError("cache matrix is not square");
            std::vector<Int> out;
            for (const auto& e : row) out.push_back(int_from_dec(e.get<std::string>()));
            ct.p.push_back(std::move(out));
        }
        return ct;
    } catch (const json::exception& e) {
        throw CacheError(std::string("cache field error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CacheError(std::string("cache value error: ") + e.what());
    }
}

std::string cache_file_name(int k, int n) {
    return "table_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json";
}

void store_table(const CharacterTable& ct, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path target = fs::path(dir) / cache_file_name(ct.k, ct.n);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write cache file " + tmp.string());
        out << serialize_table(ct);
    }
    fs::rename(tmp, target);
}

std::optional<CharacterTable> load_table(int k, int n, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::path target = fs::path(dir) / cache_file_name(k, n);
    if (!fs::exists(target)) return std::nullopt;
    std::ifstream in(target, std::ios::binary);
    if (!in) throw CacheError("cannot read cache file " + target.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_table(buf.str());
    } catch (const CacheError& e) {
        throw CacheError(target.string() + ": " + e.what());
    }
}

}  // namespace injscheme
