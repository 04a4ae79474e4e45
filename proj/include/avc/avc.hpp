// Copyright 2026 The avc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AVC_AVC_HPP_
#define AVC_AVC_HPP_

#include "avc/codes.hpp"
#include "avc/config.hpp"
#include "avc/decoder.hpp"
#include "avc/error.hpp"
#include "avc/gf.hpp"
#include "avc/golden.hpp"
#include "avc/ideal.hpp"
#include "avc/linalg.hpp"
#include "avc/maps.hpp"
#include "avc/mindex.hpp"
#include "avc/points.hpp"
#include "avc/polynomial.hpp"
#include "avc/textio.hpp"
#include "avc/transform.hpp"

#endif  // AVC_AVC_HPP_
