// Copyright 2026 The castchaos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Images cross the boundary as uint8 numpy arrays shaped
// (h, w) or (h, w, c); containers as bytes.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <span>
#include <string>

#include "castchaos/cast128.hpp"
#include "castchaos/container.hpp"
#include "castchaos/error.hpp"
#include "castchaos/key.hpp"
#include "castchaos/lsm.hpp"
#include "castchaos/metrics.hpp"
#include "castchaos/modes.hpp"
#include "castchaos/pipeline.hpp"
#include "castchaos/sbox.hpp"

namespace py = pybind11;

namespace castchaos {
namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

std::span<const std::uint8_t> BytesView(const py::bytes& b) {
  const std::string_view sv = b;
  return {reinterpret_cast<const std::uint8_t*>(sv.data()), sv.size()};
}

py::bytes ToBytes(std::span<const std::uint8_t> v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

Key128 AsKey(const py::object& key) {
  if (py::isinstance<Key128>(key)) return key.cast<Key128>();
  if (py::isinstance<py::str>(key)) return Key128::FromHex(key.cast<std::string>());
  if (py::isinstance<py::bytes>(key)) return Key128::FromBytes(BytesView(key.cast<py::bytes>()));
  throw py::type_error("key must be a Key, 32 hex digits, or 16 bytes");
}

ImageBuffer ArrayToImage(const U8Array& a) {
  int channels = 1;
  if (a.ndim() == 3) {
    channels = static_cast<int>(a.shape(2));
  } else if (a.ndim() != 2) {
    throw py::value_error("image array must have shape (h, w) or (h, w, c)");
  }
  const auto h = static_cast<std::uint32_t>(a.shape(0));
  const auto w = static_cast<std::uint32_t>(a.shape(1));
  std::vector<std::uint8_t> px(a.data(), a.data() + a.size());
  return ImageBuffer(w, h, channels, std::move(px));
}

U8Array ImageToArray(const ImageBuffer& img) {
  std::vector<py::ssize_t> shape{img.height(), img.width()};
  if (img.channels() > 1) shape.push_back(img.channels());
  U8Array out(shape);
  std::memcpy(out.mutable_data(), img.pixels().data(), img.pixels().size());
  return out;
}

std::span<const std::uint8_t> ArrayView(const U8Array& a) {
  return {a.data(), static_cast<std::size_t>(a.size())};
}

std::span<const std::uint8_t, 256> Table256(const U8Array& a) {
  if (a.size() != 256) throw py::value_error("S-box table must have 256 entries");
  return std::span<const std::uint8_t, 256>(a.data(), 256);
}

U8Array TableArray(const SBox8::Table& t) {
  return U8Array(std::vector<py::ssize_t>{256}, std::vector<py::ssize_t>{1},
                 t.data());
}

}  // namespace
}  // namespace castchaos

PYBIND11_MODULE(_core, m) {
  using namespace castchaos;
  m.doc() = "CAST-128 image encryption with chaotic key-dependent S-boxes";

  // Held for the lifetime of the interpreter.
  static PyObject* error_type =
      py::exception<Error>(m, "Error", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Key128>(m, "Key")
      .def(py::init([](const py::object& k) { return AsKey(k); }), py::arg("key"))
      .def_static("from_hex", &Key128::FromHex)
      .def("hex", &Key128::ToHex)
      .def("__bytes__", [](const Key128& k) { return ToBytes(k.bytes()); })
      .def("with_bit_flipped", &Key128::WithBitFlipped, py::arg("bit"))
      .def("__eq__", [](const Key128& a, const Key128& b) { return a == b; })
      .def("__repr__", [](const Key128& k) { return "Key('" + k.ToHex() + "')"; });

  py::class_<LsmParams>(m, "LsmParams")
      .def(py::init([](double r, double mu, double x0, std::uint32_t warmup) {
             LsmParams p;
             p.r = r;
             p.mu = mu;
             p.x0 = x0;
             p.warmup = warmup;
             p.Validate();
             return p;
           }),
           py::arg("r"), py::arg("mu"), py::arg("x0"), py::arg("warmup") = 1000)
      .def_readonly("r", &LsmParams::r)
      .def_readonly("mu", &LsmParams::mu)
      .def_readonly("x0", &LsmParams::x0)
      .def_readonly("warmup", &LsmParams::warmup)
      .def("in_key_range", &LsmParams::InKeyRange);

  m.def("lsm_step", [](double x, double r, double mu) {
    LsmParams p;
    p.r = r;
    p.mu = mu;
    return LsmStep(x, p);
  }, py::arg("x"), py::arg("r"), py::arg("mu"));
  m.def("lsm_stream", &LsmStream, py::arg("params"), py::arg("n"));
  m.def("derive_params", [](const py::object& key, int lane) {
    return DeriveParams(AsKey(key), lane);
  }, py::arg("key"), py::arg("lane"));

  m.def("generate_sbox", [](const LsmParams& p) {
    return TableArray(GenerateSBox(p).table());
  }, py::arg("params"));
  m.def("is_bijective", [](const U8Array& t) { return IsBijective(Table256(t)); });
  m.def("invert_sbox", [](const U8Array& t) {
    SBox8::Table table;
    std::memcpy(table.data(), t.data(), 256);
    return TableArray(SBox8::FromTable(table).inverse());
  }, py::arg("table"));
  m.def("sbox_sigmas", [](const py::object& key) {
    const auto set = DynamicSBoxSet::FromKey(AsKey(key));
    py::list out;
    for (const auto& s : set.sigmas()) out.append(TableArray(s.table()));
    return out;
  }, py::arg("key"));
  m.def("sbox_fingerprint", [](const py::object& key) {
    return DynamicSBoxSet::FromKey(AsKey(key)).fingerprint();
  }, py::arg("key"));
  m.def("nonlinearity", [](const U8Array& t) { return Nonlinearity(Table256(t)); });
  m.def("differential_uniformity",
        [](const U8Array& t) { return DifferentialUniformity(Table256(t)); });
  m.def("sac_matrix", [](const U8Array& t) { return SacMatrix(Table256(t)); });
  m.def("analyze_sbox", [](const U8Array& t) {
    const SBoxQuality q = AnalyzeSBox(Table256(t));
    py::dict d;
    d["nonlinearity"] = q.nonlinearity;
    d["coordinate_nonlinearity"] = q.coordinate_nonlinearity;
    d["sac_mean_deviation"] = q.sac_mean_deviation;
    d["differential_uniformity"] = q.differential_uniformity;
    d["fixed_points"] = q.fixed_points;
    d["bijective"] = q.bijective;
    return d;
  }, py::arg("table"));

  py::class_<CipherState>(m, "BlockCipher")
      .def(py::init([](const py::object& key, bool dynamic) {
             const Key128 k = AsKey(key);
             return dynamic ? CipherState(k, DynamicSBoxSet::FromKey(k))
                            : CipherState(k);
           }),
           py::arg("key"), py::arg("dynamic") = false)
      .def("encrypt_block", [](const CipherState& s, std::uint64_t b) {
        return s.Encrypt(Block64::FromU64(b)).ToU64();
      })
      .def("decrypt_block", [](const CipherState& s, std::uint64_t b) {
        return s.Decrypt(Block64::FromU64(b)).ToU64();
      })
      .def_property_readonly("dynamic", &CipherState::dynamic);

  m.def("encrypt_image", [](const U8Array& img, const py::object& key,
                            const std::string& mode, bool dynamic) {
    const auto c = EncryptImage(ArrayToImage(img), AsKey(key),
                                ParseChainMode(mode), dynamic);
    return ToBytes(c.Serialize());
  }, py::arg("image"), py::arg("key"), py::arg("mode") = "cbc2",
     py::arg("dynamic") = true);
  m.def("decrypt_image", [](const py::bytes& data, const py::object& key) {
    return ImageToArray(DecryptImage(CipherImage::Parse(BytesView(data)), AsKey(key)));
  }, py::arg("container"), py::arg("key"));
  m.def("encrypt_bytes", [](const py::bytes& data, const py::object& key,
                            const std::string& mode, bool dynamic) {
    const ImageCipher cipher(AsKey(key), ParseChainMode(mode), dynamic);
    return ToBytes(cipher.EncryptRaw(BytesView(data)).Serialize());
  }, py::arg("data"), py::arg("key"), py::arg("mode") = "cbc2",
     py::arg("dynamic") = true);
  m.def("decrypt_bytes", [](const py::bytes& data, const py::object& key) {
    return ToBytes(DecryptRaw(CipherImage::Parse(BytesView(data)), AsKey(key)));
  }, py::arg("container"), py::arg("key"));
  m.def("cipher_payload", [](const py::bytes& data) {
    return ImageToArray(CipherAsImage(CipherImage::Parse(BytesView(data))));
  }, py::arg("container"));

  m.def("entropy", [](const U8Array& a) { return ShannonEntropy(ArrayView(a)); });
  m.def("histogram", [](const U8Array& a) { return ComputeHistogram(ArrayView(a)); });
  m.def("chi_square", [](const U8Array& a) {
    return ChiSquareUniformity(ComputeHistogram(ArrayView(a)));
  });
  m.def("npcr", [](const U8Array& a, const U8Array& b) {
    return Npcr(ArrayView(a), ArrayView(b));
  });
  m.def("uaci", [](const U8Array& a, const U8Array& b) {
    return Uaci(ArrayView(a), ArrayView(b));
  });
  m.def("psnr", [](const U8Array& a, const U8Array& b) {
    return Psnr(ArrayView(a), ArrayView(b));
  });
  m.def("differential_test", [](const U8Array& img, const py::object& key,
                                const std::string& mode, bool dynamic) {
    const auto r = DifferentialTest(ArrayToImage(img), AsKey(key),
                                    ParseChainMode(mode), dynamic);
    return py::make_tuple(r.npcr, r.uaci);
  }, py::arg("image"), py::arg("key"), py::arg("mode") = "cbc2",
     py::arg("dynamic") = true);
}
