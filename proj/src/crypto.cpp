/*
 * Copyright 2026 the ibc-sim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ibc/crypto.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "ibc/hash.hpp"

namespace ibc {

namespace {

struct PkeyDeleter {
  void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct CtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

PkeyPtr private_key(const Bytes& seed32) {
  PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, seed32.data(),
                                           seed32.size()));
  if (!key) throw std::runtime_error("ed25519 private key construction failed");
  return key;
}

}  // namespace

SignerKey signer_from_seed(const Bytes& seed32) {
  if (seed32.size() != 32) throw std::invalid_argument("ed25519 seed must be 32 bytes");
  auto key = private_key(seed32);
  std::size_t len = 32;
  Bytes pub(32);
  if (EVP_PKEY_get_raw_public_key(key.get(), pub.data(), &len) != 1 || len != 32) {
    throw std::runtime_error("ed25519 public key extraction failed");
  }
  return SignerKey{seed32, std::move(pub)};
}

SignerKey derive_signer(std::uint64_t ledger_seed, std::uint32_t index) {
  Encoder enc;
  enc.put_str("signer");
  enc.put_u64(ledger_seed);
  enc.put_u64(index);
  auto h = sha256(enc.take());
  return signer_from_seed(Bytes(h.begin(), h.end()));
}

Bytes ed25519_sign(const Bytes& seed32, std::span<const std::uint8_t> message) {
  auto key = private_key(seed32);
  CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx) throw std::runtime_error("md ctx alloc failed");
  if (EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1) {
    throw std::runtime_error("sign init failed");
  }
  std::size_t siglen = 64;
  Bytes sig(64);
  if (EVP_DigestSign(ctx.get(), sig.data(), &siglen, message.data(), message.size()) != 1 ||
      siglen != 64) {
    throw std::runtime_error("sign failed");
  }
  return sig;
}

bool ed25519_verify(const Bytes& public_key, std::span<const std::uint8_t> message,
                    std::span<const std::uint8_t> signature) {
  if (public_key.size() != 32 || signature.size() != 64) return false;
  PkeyPtr key(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, public_key.data(),
                                          public_key.size()));
  if (!key) return false;
  CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx) return false;
  if (EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, key.get()) != 1) return false;
  return EVP_DigestVerify(ctx.get(), signature.data(), signature.size(), message.data(),
                          message.size()) == 1;
}

}  // namespace ibc
