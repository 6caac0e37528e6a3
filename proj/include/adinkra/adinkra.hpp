// Copyright 2026 The adinkra-fec Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "adinkra/algebra.hpp"
#include "adinkra/baobab.hpp"
#include "adinkra/bits.hpp"
#include "adinkra/code.hpp"
#include "adinkra/codec.hpp"
#include "adinkra/error.hpp"
#include "adinkra/gates.hpp"
#include "adinkra/graph.hpp"
#include "adinkra/propagation.hpp"
#include "adinkra/quaternion.hpp"
