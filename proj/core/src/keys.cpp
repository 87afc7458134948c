// Copyright (c) 2026 The covtx developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <covtx/keys.hpp>

#include <covtx/bytes.hpp>
#include <covtx/errors.hpp>

#include <filesystem>
#include <fstream>

#include "../../vendor/json.hpp"

namespace covtx {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open key file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("malformed key file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("malformed key file " + path + ": not a JSON object");
    return j;
}

Bytes32 hex_field(const json& j, const std::string& path, const char* field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw UsageError("key file " + path + " is missing field \"" + field + "\"");
    try {
        return from_hex_array<32>(j.at(field).get<std::string>());
    } catch (const std::invalid_argument&) {
        throw UsageError("key file " + path + ": field \"" + field + "\" is not 32 hex bytes");
    }
}

Point point_field(const json& j, const std::string& path, const char* field) {
    auto p = Point::decode(hex_field(j, path, field));
    if (!p) throw UsageError("key file " + path + ": field \"" + field + "\" is not a valid point");
    return *p;
}

Scalar scalar_field(const json& j, const std::string& path, const char* field) {
    auto s = Scalar::from_bytes(hex_field(j, path, field));
    if (!s) throw UsageError("key file " + path + ": field \"" + field + "\" is not a canonical scalar");
    return *s;
}

void write_json_file(const std::string& path, const json& j, bool overwrite) {
    if (!overwrite && std::filesystem::exists(path))
        throw UsageError("refusing to overwrite existing file: " + path);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw UsageError("cannot write key file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

KeyQuad KeyQuad::generate(Rng& rng) {
    KeyQuad k;
    k.view_priv = Scalar::random(rng);
    k.view_pub = scalar_mul_base(k.view_priv);
    k.spend_priv = Scalar::random(rng);
    k.spend_pub = scalar_mul_base(k.spend_priv);
    return k;
}

TxKeys TxKeys::generate(Rng& rng) {
    TxKeys t;
    t.tx_priv = Scalar::random(rng);
    t.tx_pub = scalar_mul_base(t.tx_priv);
    return t;
}

void save_wallet(const std::string& path, const KeyQuad& keys, bool overwrite) {
    json j{
        {"view_priv", to_hex(view(keys.view_priv.to_bytes()))},
        {"view_pub", to_hex(view(keys.view_pub.encode()))},
        {"spend_priv", to_hex(view(keys.spend_priv.to_bytes()))},
        {"spend_pub", to_hex(view(keys.spend_pub.encode()))},
    };
    write_json_file(path, j, overwrite);
}

KeyQuad load_wallet(const std::string& path) {
    json j = read_json_file(path);
    KeyQuad k;
    k.view_priv = scalar_field(j, path, "view_priv");
    k.view_pub = point_field(j, path, "view_pub");
    k.spend_priv = scalar_field(j, path, "spend_priv");
    k.spend_pub = point_field(j, path, "spend_pub");
    if (!(scalar_mul_base(k.view_priv) == k.view_pub) ||
        !(scalar_mul_base(k.spend_priv) == k.spend_pub))
        throw UsageError("key file " + path + ": public keys do not match private keys");
    return k;
}

PeerKeys load_peer_keys(const std::string& path) {
    json j = read_json_file(path);
    PeerKeys p;
    p.view_pub = point_field(j, path, "view_pub");
    p.spend_pub = point_field(j, path, "spend_pub");
    return p;
}

void save_peer_keys(const std::string& path, const PeerKeys& keys, bool overwrite) {
    json j{
        {"view_pub", to_hex(view(keys.view_pub.encode()))},
        {"spend_pub", to_hex(view(keys.spend_pub.encode()))},
    };
    write_json_file(path, j, overwrite);
}

}  // namespace covtx
