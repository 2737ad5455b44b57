// Copyright 2026 The lpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "lpd/config.hpp"
#include "lpd/edge_morph.hpp"
#include "lpd/error.hpp"
#include "lpd/image_io.hpp"
#include "lpd/pipeline.hpp"
#include "lpd/plate_filter.hpp"
#include "lpd/preprocess.hpp"
#include "lpd/ratio.hpp"
#include "lpd/raster.hpp"
#include "lpd/segmentation.hpp"
#include "lpd/synth.hpp"
