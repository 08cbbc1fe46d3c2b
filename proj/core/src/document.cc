// Copyright 2026 The canvasa11y Authors
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

#include "canvasa11y/document.h"

namespace canvasa11y {

bool IsCheckable(WidgetClass c) {
  return c == WidgetClass::kCheckBoxSelected ||
         c == WidgetClass::kCheckBoxUnselected ||
         c == WidgetClass::kRadioSelected || c == WidgetClass::kRadioUnselected;
}

bool IsSelectedVariant(WidgetClass c) {
  return c == WidgetClass::kCheckBoxSelected ||
         c == WidgetClass::kRadioSelected;
}

}  // namespace canvasa11y
