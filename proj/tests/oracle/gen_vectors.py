#!/usr/bin/env python3
"""Independent reference oracle for the covtx test suite.

Everything here is implemented from first principles (textbook curve
arithmetic on affine coordinates, a from-scratch Keccak permutation, a
from-scratch AES) precisely so that it shares no code path with the C++
library. Run it to regenerate tests/data/vectors.json; the committed file is
frozen and the C++ tests compare against it byte-exactly.

    python3 tests/oracle/gen_vectors.py > tests/data/vectors.json
"""

import hashlib
import json
import sys

# ---------------------------------------------------------------------------
# Keccak-256 (original padding 0x01, rate 136) built from the permutation spec
# with generated round constants and rotation offsets.


def _keccak_round_constants():
    def rc_bit(t):
        if t % 255 == 0:
            return 1
        r = 1
        for _ in range(1, t % 255 + 1):
            r <<= 1
            if r & 0x100:
                r ^= 0x171  # x^8 + x^6 + x^5 + x^4 + 1
        return r & 1

    constants = []
    for rnd in range(24):
        rc = 0
        for j in range(7):
            if rc_bit(j + 7 * rnd):
                rc |= 1 << (2**j - 1)
        constants.append(rc)
    return constants


def _keccak_rotation_offsets():
    offsets = {(0, 0): 0}
    x, y = 1, 0
    for t in range(24):
        offsets[(x, y)] = ((t + 1) * (t + 2) // 2) % 64
        x, y = y, (2 * x + 3 * y) % 5
    return offsets


_RC = _keccak_round_constants()
_ROT = _keccak_rotation_offsets()
_MASK64 = (1 << 64) - 1


def _rotl(v, n):
    return ((v << n) | (v >> (64 - n))) & _MASK64


def _keccak_f(a):
    for rnd in range(24):
        c = [a[(x, 0)] ^ a[(x, 1)] ^ a[(x, 2)] ^ a[(x, 3)] ^ a[(x, 4)] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1) for x in range(5)]
        for x in range(5):
            for y in range(5):
                a[(x, y)] ^= d[x]
        b = {}
        for x in range(5):
            for y in range(5):
                b[(y, (2 * x + 3 * y) % 5)] = _rotl(a[(x, y)], _ROT[(x, y)])
        for x in range(5):
            for y in range(5):
                a[(x, y)] = b[(x, y)] ^ ((~b[((x + 1) % 5, y)]) & b[((x + 2) % 5, y)])
        a[(0, 0)] ^= _RC[rnd]
    return a


def keccak256(data: bytes) -> bytes:
    rate = 136
    padded = bytearray(data)
    padded.append(0x01)
    while len(padded) % rate != 0:
        padded.append(0x00)
    padded[-1] |= 0x80

    state = {(x, y): 0 for x in range(5) for y in range(5)}
    for off in range(0, len(padded), rate):
        block = padded[off : off + rate]
        for i in range(rate // 8):
            lane = int.from_bytes(block[8 * i : 8 * i + 8], "little")
            x, y = i % 5, i // 5
            state[(x, y)] ^= lane
        state = _keccak_f(state)

    out = b"".join(state[(i % 5, i // 5)].to_bytes(8, "little") for i in range(4))
    return out[:32]


assert keccak256(b"").hex() == "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470"
assert keccak256(b"abc").hex() == "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45"

# ---------------------------------------------------------------------------
# Edwards curve, affine coordinates over GF(2^255 - 19).

P = 2**255 - 19
L = 2**252 + 27742317777372353535851937790883648493
D = (-121665 * pow(121666, P - 2, P)) % P
SQRT_M1 = pow(2, (P - 1) // 4, P)

IDENT = (0, 1)


def pt_add(p1, p2):
    (x1, y1), (x2, y2) = p1, p2
    x3 = (x1 * y2 + y1 * x2) * pow(1 + D * x1 * x2 * y1 * y2, P - 2, P)
    y3 = (y1 * y2 + x1 * x2) * pow(1 - D * x1 * x2 * y1 * y2, P - 2, P)
    return (x3 % P, y3 % P)


def pt_mul(k, pt):
    acc = IDENT
    while k:
        if k & 1:
            acc = pt_add(acc, pt)
        pt = pt_add(pt, pt)
        k >>= 1
    return acc


def pt_encode(pt) -> bytes:
    x, y = pt
    enc = bytearray(y.to_bytes(32, "little"))
    if x & 1:
        enc[31] |= 0x80
    return bytes(enc)


def _recover_x(y, sign):
    u = (y * y - 1) % P
    v = (D * y * y + 1) % P
    x = (u * pow(v, 3, P)) % P * pow((u * pow(v, 7, P)) % P, (P - 5) // 8, P) % P
    if (v * x * x) % P != u:
        if (v * x * x) % P != (-u) % P:
            return None
        x = (x * SQRT_M1) % P
    if x == 0 and sign:
        return None
    if x % 2 != sign:
        x = P - x
    return x


def pt_decode(enc: bytes):
    """Strict decoder matching the library: canonical y, on-curve, x-sign
    canonical. Small-order points are decodable here; validity adds that."""
    y = int.from_bytes(enc, "little") & ((1 << 255) - 1)
    if y >= P:
        return None
    sign = enc[31] >> 7
    x = _recover_x(y, sign)
    if x is None:
        return None
    return (x, y)


def pt_is_small_order(pt):
    return pt_mul(8, pt) == IDENT


def decode_valid(enc: bytes) -> bool:
    pt = pt_decode(enc)
    return pt is not None and not pt_is_small_order(pt)


B_Y = (4 * pow(5, P - 2, P)) % P
BASE = (_recover_x(B_Y, 0), B_Y)
assert pt_mul(L, BASE) == IDENT

# ---------------------------------------------------------------------------
# AES-256 from FIPS-197 (tables generated, not typed) and CTR keystream.


def _xtime(a):
    a <<= 1
    if a & 0x100:
        a ^= 0x11B
    return a & 0xFF


def _gf_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a = _xtime(a)
        b >>= 1
    return out


def _make_sbox():
    # Multiplicative inverse in GF(2^8) followed by the affine transform.
    sbox = [0] * 256
    for v in range(256):
        inv = 0
        if v:
            for cand in range(1, 256):
                if _gf_mul(v, cand) == 1:
                    inv = cand
                    break
        b = inv
        res = 0
        for i in range(8):
            bit = ((b >> i) & 1) ^ ((b >> ((i + 4) % 8)) & 1) ^ ((b >> ((i + 5) % 8)) & 1) \
                ^ ((b >> ((i + 6) % 8)) & 1) ^ ((b >> ((i + 7) % 8)) & 1) ^ ((0x63 >> i) & 1)
            res |= bit << i
        sbox[v] = res
    return sbox


_SBOX = _make_sbox()
assert _SBOX[0x00] == 0x63 and _SBOX[0x53] == 0xED


def _key_expansion_256(key: bytes):
    assert len(key) == 32
    words = [list(key[4 * i : 4 * i + 4]) for i in range(8)]
    rcon = 1
    for i in range(8, 60):
        temp = list(words[i - 1])
        if i % 8 == 0:
            temp = temp[1:] + temp[:1]
            temp = [_SBOX[b] for b in temp]
            temp[0] ^= rcon
            rcon = _xtime(rcon)
        elif i % 8 == 4:
            temp = [_SBOX[b] for b in temp]
        words.append([w ^ t for w, t in zip(words[i - 8], temp)])
    return [words[4 * r : 4 * r + 4] for r in range(15)]


def _aes256_encrypt_block(round_keys, block: bytes) -> bytes:
    state = [[block[r + 4 * c] for c in range(4)] for r in range(4)]

    def add_round_key(rk):
        for c in range(4):
            for r in range(4):
                state[r][c] ^= rk[c][r]

    def sub_bytes():
        for c in range(4):
            for r in range(4):
                state[r][c] = _SBOX[state[r][c]]

    def shift_rows():
        for r in range(1, 4):
            state[r] = state[r][r:] + state[r][:r]

    def mix_columns():
        for c in range(4):
            col = [state[r][c] for r in range(4)]
            state[0][c] = _gf_mul(col[0], 2) ^ _gf_mul(col[1], 3) ^ col[2] ^ col[3]
            state[1][c] = col[0] ^ _gf_mul(col[1], 2) ^ _gf_mul(col[2], 3) ^ col[3]
            state[2][c] = col[0] ^ col[1] ^ _gf_mul(col[2], 2) ^ _gf_mul(col[3], 3)
            state[3][c] = _gf_mul(col[0], 3) ^ col[1] ^ col[2] ^ _gf_mul(col[3], 2)

    add_round_key(round_keys[0])
    for rnd in range(1, 14):
        sub_bytes()
        shift_rows()
        mix_columns()
        add_round_key(round_keys[rnd])
    sub_bytes()
    shift_rows()
    add_round_key(round_keys[14])
    return bytes(state[r][c] for c in range(4) for r in range(4))


def aes256_ctr_zero_iv(key: bytes, data: bytes) -> bytes:
    round_keys = _key_expansion_256(key)
    out = bytearray()
    counter = 0
    for off in range(0, len(data), 16):
        block = counter.to_bytes(16, "big")
        stream = _aes256_encrypt_block(round_keys, block)
        chunk = data[off : off + 16]
        out.extend(b ^ s for b, s in zip(chunk, stream))
        counter += 1
    return bytes(out)


def _selfcheck_aes():
    try:
        from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
    except ImportError:
        sys.stderr.write("note: cryptography package missing, AES self-check skipped\n")
        return
    key = bytes(range(32))
    pt = bytes(range(48))
    enc = Cipher(algorithms.AES(key), modes.CTR(b"\x00" * 16)).encryptor()
    want = enc.update(pt) + enc.finalize()
    got = aes256_ctr_zero_iv(key, pt)
    assert got == want, f"AES self-check failed: {got.hex()} != {want.hex()}"


_selfcheck_aes()

# ---------------------------------------------------------------------------
# Protocol constructions under test.


def sha512(data: bytes) -> bytes:
    return hashlib.sha512(data).digest()


def varint(n: int) -> bytes:
    out = bytearray()
    while n >= 0x80:
        out.append((n & 0x7F) | 0x80)
        n >>= 7
    out.append(n)
    return bytes(out)


def fixture_scalar(name: str) -> int:
    raw = sha512(b"covtx-fixture/" + name.encode())
    val = int.from_bytes(raw, "little") % L
    assert val != 0
    return val


def fixture_bytes(name: str, n: int) -> bytes:
    out = bytearray()
    counter = 0
    while len(out) < n:
        out.extend(sha512(b"covtx-bytes/" + name.encode() + b"/" + str(counter).encode()))
        counter += 1
    return bytes(out[:n])


def scalar_le(k: int) -> bytes:
    return k.to_bytes(32, "little")


def hs_digest(S, t: int) -> bytes:
    """H(S, t) = keccak(encode(S) || varint(t)); the per-output secret."""
    return keccak256(pt_encode(S) + varint(t))


def stealth_address(S, t: int, spend_pub):
    scal = int.from_bytes(hs_digest(S, t), "little") % L
    return pt_add(pt_mul(scal, BASE), spend_pub)


def mask_amount(a: int, S, t: int) -> bytes:
    pad = keccak256(b"amount" + hs_digest(S, t))[:8]
    return bytes(x ^ y for x, y in zip(a.to_bytes(8, "little"), pad))


def mask_amount_signed(a: int, S, t: int, r: bytes, s: bytes) -> bytes:
    pad = keccak256(b"amount" + hs_digest(S, t) + r + s)[:8]
    return bytes(x ^ y for x, y in zip(a.to_bytes(8, "little"), pad))


def eddsa_sign(scalar: int, msg: bytes):
    pub = pt_mul(scalar, BASE)
    nonce = int.from_bytes(sha512(scalar_le(scalar) + msg), "little") % L
    R = pt_mul(nonce, BASE)
    c = int.from_bytes(sha512(pt_encode(R) + pt_encode(pub) + msg), "little") % L
    s = (nonce + c * scalar) % L
    return pt_encode(R), scalar_le(s)


def eddsa_verify(pub, msg: bytes, r: bytes, s_bytes: bytes) -> bool:
    R = pt_decode(r)
    if R is None:
        return False
    s = int.from_bytes(s_bytes, "little")
    if s >= L:
        return False
    c = int.from_bytes(sha512(r + pt_encode(pub) + msg), "little") % L
    return pt_mul(s, BASE) == pt_add(R, pt_mul(c, pub))


def session_key(K_ori, view_pub, spend_pub) -> bytes:
    return keccak256(pt_encode(K_ori) + pt_encode(view_pub) + pt_encode(spend_pub))


def xor32(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Vector families.

vectors = {}

vectors["keccak256"] = [
    {"in": "", "out": keccak256(b"").hex()},
    {"in": b"abc".hex(), "out": keccak256(b"abc").hex()},
    {"in": fixture_bytes("keccak-one-block", 135).hex(),
     "out": keccak256(fixture_bytes("keccak-one-block", 135)).hex()},
    {"in": fixture_bytes("keccak-block-boundary", 136).hex(),
     "out": keccak256(fixture_bytes("keccak-block-boundary", 136)).hex()},
    {"in": fixture_bytes("keccak-multi-block", 300).hex(),
     "out": keccak256(fixture_bytes("keccak-multi-block", 300)).hex()},
]

vectors["hash_to_scalar"] = []
for name in ["hts-a", "hts-b", "hts-c"]:
    data = fixture_bytes(name, 55)
    scal = int.from_bytes(keccak256(data), "little") % L
    vectors["hash_to_scalar"].append({"in": data.hex(), "scalar": scalar_le(scal).hex()})

sc_a = fixture_scalar("sc-a")
sc_b = fixture_scalar("sc-b")
wide = fixture_bytes("sc-wide", 64)
vectors["scalar_arith"] = {
    "a": scalar_le(sc_a).hex(),
    "b": scalar_le(sc_b).hex(),
    "sum": scalar_le((sc_a + sc_b) % L).hex(),
    "product": scalar_le((sc_a * sc_b) % L).hex(),
    "wide_in": wide.hex(),
    "wide_reduced": scalar_le(int.from_bytes(wide, "little") % L).hex(),
    "l_minus_1": scalar_le(L - 1).hex(),
    "l": scalar_le(L).hex(),  # non-canonical: from_bytes must reject
}

vectors["base_mul"] = []
for k in [1, 2, 3, 7, 0xDEADBEEF, L - 1, fixture_scalar("bm-k")]:
    vectors["base_mul"].append({"k": scalar_le(k).hex(), "point": pt_encode(pt_mul(k, BASE)).hex()})

pt_p = pt_mul(fixture_scalar("pa-p"), BASE)
pt_q = pt_mul(fixture_scalar("pa-q"), BASE)
vectors["point_add"] = [
    {"p": pt_encode(BASE).hex(), "q": pt_encode(BASE).hex(), "sum": pt_encode(pt_add(BASE, BASE)).hex()},
    {"p": pt_encode(pt_p).hex(), "q": pt_encode(pt_q).hex(), "sum": pt_encode(pt_add(pt_p, pt_q)).hex()},
]

k_gen = fixture_scalar("pm-k")
vectors["point_mul"] = [
    {"k": scalar_le(k_gen).hex(), "p": pt_encode(pt_p).hex(),
     "out": pt_encode(pt_mul(k_gen, pt_p)).hex()},
]

base_enc = pt_encode(BASE)
flip_bits = []
for bit in range(256):
    mutated = bytearray(base_enc)
    mutated[bit // 8] ^= 1 << (bit % 8)
    flip_bits.append("1" if decode_valid(bytes(mutated)) else "0")
vectors["decode_bitflips"] = {"base": base_enc.hex(), "valid": "".join(flip_bits)}

uniform_bitmap = []
valid_count = 0
for i in range(10000):
    enc = sha512(i.to_bytes(4, "little"))[:32]
    ok = decode_valid(enc)
    uniform_bitmap.append(ok)
    valid_count += ok
bitmap_bytes = bytearray((len(uniform_bitmap) + 7) // 8)
for i, ok in enumerate(uniform_bitmap):
    if ok:
        bitmap_bytes[i // 8] |= 1 << (i % 8)
vectors["uniform_decode"] = {
    "derivation": "string i = sha512(le32(i))[0:32]",
    "n": 10000,
    "valid_count": valid_count,
    "bitmap": bytes(bitmap_bytes).hex(),
}
assert 0.45 <= valid_count / 10000 <= 0.55, valid_count

ecdh_a = fixture_scalar("ecdh-a")
ecdh_b = fixture_scalar("ecdh-b")
vectors["ecdh"] = {
    "a": scalar_le(ecdh_a).hex(),
    "b": scalar_le(ecdh_b).hex(),
    "A": pt_encode(pt_mul(ecdh_a, BASE)).hex(),
    "B": pt_encode(pt_mul(ecdh_b, BASE)).hex(),
    "S": pt_encode(pt_mul(ecdh_a, pt_mul(ecdh_b, BASE))).hex(),
}

# Wallet fixtures used by all protocol-level vectors.
alice_view = fixture_scalar("alice-view")
alice_spend = fixture_scalar("alice-spend")
bob_view = fixture_scalar("bob-view")
bob_spend = fixture_scalar("bob-spend")
A_v, A_s = pt_mul(alice_view, BASE), pt_mul(alice_spend, BASE)
B_v, B_s = pt_mul(bob_view, BASE), pt_mul(bob_spend, BASE)

kr_main = fixture_scalar("stealth-kr")
S_main = pt_mul(kr_main, B_v)
vectors["stealth"] = {
    "k_r": scalar_le(kr_main).hex(),
    "K_r": pt_encode(pt_mul(kr_main, BASE)).hex(),
    "bob_view_priv": scalar_le(bob_view).hex(),
    "bob_spend_priv": scalar_le(bob_spend).hex(),
    "bob_view_pub": pt_encode(B_v).hex(),
    "bob_spend_pub": pt_encode(B_s).hex(),
    "S": pt_encode(S_main).hex(),
    "per_t": [
        {
            "t": t,
            "hs_digest": hs_digest(S_main, t).hex(),
            "address": pt_encode(stealth_address(S_main, t, B_s)).hex(),
        }
        for t in [0, 1, 2]
    ],
}

vectors["mask_amount"] = [
    {"a": 0, "t": 0, "S": pt_encode(S_main).hex(), "h": mask_amount(0, S_main, 0).hex()},
    {"a": 1345678001, "t": 0, "S": pt_encode(S_main).hex(),
     "h": mask_amount(1345678001, S_main, 0).hex()},
    {"a": 2**64 - 1, "t": 1, "S": pt_encode(S_main).hex(),
     "h": mask_amount(2**64 - 1, S_main, 1).hex()},
]

msg_fix = fixture_bytes("eddsa-msg", 32)
sig_r, sig_s = eddsa_sign(alice_view, msg_fix)
assert eddsa_verify(A_v, msg_fix, sig_r, sig_s)
vectors["eddsa"] = {
    "scalar": scalar_le(alice_view).hex(),
    "pub": pt_encode(A_v).hex(),
    "msg": msg_fix.hex(),
    "r": sig_r.hex(),
    "s": sig_s.hex(),
}

vectors["mask_amount_signed"] = [
    {"a": 1345678001, "t": 0, "S": pt_encode(S_main).hex(), "r": sig_r.hex(), "s": sig_s.hex(),
     "h": mask_amount_signed(1345678001, S_main, 0, sig_r, sig_s).hex()},
    {"a": 7, "t": 0, "S": pt_encode(S_main).hex(), "r": sig_r.hex(), "s": sig_s.hex(),
     "h": mask_amount_signed(7, S_main, 0, sig_r, sig_s).hex()},
]

K_ori_skey = stealth_address(S_main, 0, B_s)
vectors["session_key"] = {
    "K_ori": pt_encode(K_ori_skey).hex(),
    "view_pub": pt_encode(B_v).hex(),
    "spend_pub": pt_encode(B_s).hex(),
    "key": session_key(K_ori_skey, B_v, B_s).hex(),
}

cipher_key = fixture_bytes("cipher-key", 32)
cipher_pt = fixture_bytes("cipher-pt", 32)
vectors["cipher"] = {
    "key": cipher_key.hex(),
    "plaintext": cipher_pt.hex(),
    "ciphertext": aes256_ctr_zero_iv(cipher_key, cipher_pt).hex(),
}

vectors["amount_code"] = [
    {"a": 1345678001, "valid": True, "flag": 1, "middle": 345678, "seq": 1},
    {"a": 999999999, "valid": True, "flag": 0, "middle": 999999, "seq": 999},
    {"a": 1999999999, "valid": True, "flag": 1, "middle": 999999, "seq": 999},
    {"a": 2000000000, "valid": False},
    {"a": 2**64 - 1, "valid": False},
    {"a": 0, "valid": True, "flag": 0, "middle": 0, "seq": 0},
    {"a": 123456007, "valid": True, "flag": 0, "middle": 123456, "seq": 7},
]

# Canonical transaction serialization:
#   tx_pub(32) || u32le(n_out) || n * (addr(32) || masked(8) || u32le(index)) || u64le(fee)
tx_pub_enc = pt_encode(pt_mul(kr_main, BASE))
out0_addr = pt_encode(stealth_address(S_main, 0, B_s))
out1_addr = pt_encode(stealth_address(S_main, 1, B_s))
out0_masked = mask_amount(1345678001, S_main, 0)
out1_masked = mask_amount(42, S_main, 1)
fee = 30000000
blob = bytearray()
blob += tx_pub_enc
blob += (2).to_bytes(4, "little")
blob += out0_addr + out0_masked + (0).to_bytes(4, "little")
blob += out1_addr + out1_masked + (1).to_bytes(4, "little")
blob += fee.to_bytes(8, "little")
vectors["tx_serialization"] = {
    "tx_pub": tx_pub_enc.hex(),
    "outputs": [
        {"address": out0_addr.hex(), "masked": out0_masked.hex(), "index": 0},
        {"address": out1_addr.hex(), "masked": out1_masked.hex(), "index": 1},
    ],
    "fee": fee,
    "blob": bytes(blob).hex(),
    "txid": keccak256(bytes(blob)).hex(),
}


def auth_attempt(k_r: int, signer_priv: int, view_pub, spend_pub):
    """One deterministic embedding attempt of the AuthTx codec."""
    K_r = pt_mul(k_r, BASE)
    msg = keccak256(pt_encode(K_r))
    r, s = eddsa_sign(signer_priv, msg)
    S = pt_mul(k_r, view_pub)
    out = {"k_r": scalar_le(k_r).hex(), "K_r": pt_encode(K_r).hex(),
           "msg": msg.hex(), "r": r.hex(), "s": s.hex(), "per_t": []}
    for t, word in [(0, r), (1, s)]:
        K_ori = stealth_address(S, t, spend_pub)
        K_new = xor32(word, pt_encode(K_ori))
        out["per_t"].append({
            "t": t,
            "K_ori": pt_encode(K_ori).hex(),
            "K_new": K_new.hex(),
            "valid": decode_valid(K_new),
        })
    return out


vectors["auth_attempt"] = {
    "sender_view_priv": scalar_le(alice_view).hex(),
    "recipient_view_pub": pt_encode(B_v).hex(),
    "recipient_spend_pub": pt_encode(B_s).hex(),
    "attempts": [auth_attempt(fixture_scalar(f"auth-kr-{i}"), alice_view, B_v, B_s)
                 for i in range(4)],
}


def trans_attempt(k_r: int, m: bytes, a: int, r: bytes, s: bytes, view_pub, spend_pub):
    S = pt_mul(k_r, view_pub)
    K_ori = stealth_address(S, 0, spend_pub)
    skey = session_key(K_ori, view_pub, spend_pub)
    c = aes256_ctr_zero_iv(skey, m)
    K_new = xor32(pt_encode(K_ori), c)
    return {
        "k_r": scalar_le(k_r).hex(),
        "K_r": pt_encode(pt_mul(k_r, BASE)).hex(),
        "m": m.hex(),
        "a": a,
        "S": pt_encode(S).hex(),
        "K_ori": pt_encode(K_ori).hex(),
        "session_key": skey.hex(),
        "c": c.hex(),
        "K_new": K_new.hex(),
        "valid": decode_valid(K_new),
        "h": mask_amount_signed(a, S, 0, r, s).hex(),
    }


vectors["trans_attempt"] = {
    "recipient_view_pub": pt_encode(B_v).hex(),
    "recipient_spend_pub": pt_encode(B_s).hex(),
    "r": sig_r.hex(),
    "s": sig_s.hex(),
    "attempts": [
        trans_attempt(fixture_scalar(f"trans-kr-{i}"), fixture_bytes(f"trans-m-{i}", 32),
                      1345678000 + i, sig_r, sig_s, B_v, B_s)
        for i in range(4)
    ],
}


def fb_attempt(k_r: int, responder_priv: int, orig_view_pub, orig_spend_pub, mms: int, middle: int):
    base = auth_attempt(k_r, responder_priv, orig_view_pub, orig_spend_pub)
    S = pt_mul(k_r, orig_view_pub)
    if mms != 0:
        a = middle * 1000 + mms  # Nack: flag digit 0
        r = bytes.fromhex(base["r"])
        s = bytes.fromhex(base["s"])
        base["amount"] = a
        base["h0"] = mask_amount_signed(a, S, 0, r, s).hex()
    return base


vectors["fb_attempt"] = {
    "responder_view_priv": scalar_le(bob_view).hex(),
    "originator_view_pub": pt_encode(A_v).hex(),
    "originator_spend_pub": pt_encode(A_s).hex(),
    "mms": 7,
    "middle": 123456,
    "attempt": fb_attempt(fixture_scalar("fb-kr-0"), bob_view, A_v, A_s, 7, 123456),
}

json.dump(vectors, sys.stdout, indent=1)
sys.stdout.write("\n")
