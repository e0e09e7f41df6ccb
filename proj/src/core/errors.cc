// Copyright 2026 The Parlab Authors
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

#include "parlab/core/errors.h"

#include <exception>

namespace parlab {

int ExitCodeForCurrentException() {
  try {
    throw;
  } catch (const SchemaError&) {
    return kExitSchema;
  } catch (const ContractViolation&) {
    return kExitContract;
  } catch (const BudgetExceeded&) {
    return kExitBudget;
  } catch (...) {
    return kExitFailure;
  }
}

}  // namespace parlab
