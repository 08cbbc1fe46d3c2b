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

#include "canvasa11y/emit.h"

#include <regex>

#include <gtest/gtest.h>

#include "canvasa11y/error.h"
#include "support/oracles.h"

namespace canvasa11y {
namespace {

WidgetNode Node(WidgetClass c, BoundingBox b) {
  WidgetNode n;
  n.widget_class = c;
  n.bbox = b;
  return n;
}

AccessibleDocument SampleDocument() {
  AccessibleDocument doc;
  doc.width = 300;
  doc.height = 200;
  std::vector<WidgetNode> nodes = {
      Node(WidgetClass::kCheckBoxSelected, {10, 10, 27, 27}),
      Node(WidgetClass::kCircButton, {100, 10, 160, 70}),
      Node(WidgetClass::kRadioUnselected, {10, 100, 28, 118}),
      Node(WidgetClass::kRadioSelected, {60, 102, 78, 120}),
      Node(WidgetClass::kTextBox, {100, 150, 240, 175}),
  };
  nodes[0].checked = true;
  nodes[0].label = "Remember <me>";
  nodes[0].value = "checkbox";
  nodes[1].value = "Go \"now\"";
  nodes[1].label = "Go \"now\"";
  nodes[2].label = "Radio button 1";
  nodes[2].value = "radio";
  nodes[3].label = "Radio button 2";
  nodes[3].value = "radio";
  nodes[3].checked = true;
  nodes[4].label = "Text box 1";
  nodes = AssignTabIndices(std::move(nodes));
  for (auto& n : nodes) n.id = "elem" + std::to_string(n.tab_index);
  AssignRadioGroups(nodes);
  CanvasTrace trace;
  trace.bindings = {{"click", true, "onCanvasClick"}, {"keyup", false, "onKey"}};
  doc.nodes = MapBindings(trace, std::move(nodes));
  TextAssignment label;
  label.text = "Remember <me>";
  label.origin = {30, 26};
  label.text_bbox = {30, 13, 85, 25};
  label.seq = 4;
  doc.standalone_labels.push_back(label);
  doc.diagnostics.rejected_regions.push_back({{1, 1, 5, 5}, WidgetClass::kLetters, 0.75});
  doc.diagnostics.unresolved_letters.push_back({3, 3, 9, 9});
  doc.diagnostics.letter_clusters.push_back({{3, 3, 9, 9}, 2});
  doc.diagnostics.warnings.push_back("commands[3]: skipped");
  return doc;
}

TEST(AssignTabIndicesTest, TopToBottomThenLeftToRight) {
  const auto out = AssignTabIndices({Node(WidgetClass::kRectButton, {0, 80, 10, 90}),
                                     Node(WidgetClass::kRectButton, {0, 0, 10, 10}),
                                     Node(WidgetClass::kRectButton, {0, 40, 10, 50})});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].bbox.min_y, 0);
  EXPECT_EQ(out[0].tab_index, 1);
  EXPECT_EQ(out[2].bbox.min_y, 80);
  EXPECT_EQ(out[2].tab_index, 3);
}

TEST(AssignTabIndicesTest, SameRowLeftFirstThenDetectionOrder) {
  auto a = Node(WidgetClass::kTextBox, {50, 5, 60, 10});
  auto b = Node(WidgetClass::kTextBox, {5, 5, 15, 10});
  auto c = Node(WidgetClass::kTextBox, {5, 5, 15, 10});
  a.id = "a";
  b.id = "b";
  c.id = "c";
  const auto out = AssignTabIndices({a, b, c});
  EXPECT_EQ(out[0].id, "b");
  EXPECT_EQ(out[1].id, "c");
  EXPECT_EQ(out[2].id, "a");
  EXPECT_EQ(AssignTabIndices({a})[0].tab_index, 1);
}

TEST(MapBindingsTest, BroadcastWithPerNodeCoordinates) {
  CanvasTrace trace;
  trace.bindings = {{"keyup", false, "k"}, {"click", true, "c"}};
  const auto out = MapBindings(trace, {Node(WidgetClass::kCircButton, {0, 0, 20, 20}),
                                       Node(WidgetClass::kCircButton, {40, 0, 60, 20}),
                                       Node(WidgetClass::kCircButton, {80, 0, 100, 20})});
  for (const auto& n : out) {
    ASSERT_EQ(n.bindings.size(), 2u);
    EXPECT_FALSE(n.bindings[0].coordinate.has_value());
    EXPECT_EQ(n.bindings[1].coordinate, n.bbox.center());
  }
  EXPECT_NE(out[0].bindings[1].coordinate, out[1].bindings[1].coordinate);
  const auto none = MapBindings(CanvasTrace{}, {Node(WidgetClass::kTextBox, {0, 0, 5, 5})});
  EXPECT_TRUE(none[0].bindings.empty());
}

TEST(ClassifyOrRejectTest, InclusiveCutoff) {
  Classification c{WidgetClass::kTextBox, 0, 1, 0};
  EXPECT_EQ(ClassifyOrReject(c, 0.35), WidgetClass::kTextBox);
  c.distance = 0.35;
  EXPECT_EQ(ClassifyOrReject(c, 0.35), WidgetClass::kTextBox);
  c.distance = 0.3500001;
  EXPECT_FALSE(ClassifyOrReject(c, 0.35).has_value());
}

TEST(AssignRadioGroupsTest, SharedBandSharesName) {
  std::vector<WidgetNode> nodes = {
      Node(WidgetClass::kRadioSelected, {10, 10, 28, 28}),
      Node(WidgetClass::kRadioUnselected, {60, 14, 78, 32}),   // same row (+4)
      Node(WidgetClass::kRadioUnselected, {200, 100, 218, 118}),
      Node(WidgetClass::kCheckBoxSelected, {60, 100, 76, 116}),
  };
  AssignRadioGroups(nodes);
  EXPECT_FALSE(nodes[0].group.empty());
  EXPECT_EQ(nodes[0].group, nodes[1].group);
  EXPECT_NE(nodes[2].group, nodes[0].group);
  EXPECT_TRUE(nodes[3].group.empty());
}

TEST(EmitHtmlTest, UnselectedCheckboxCarriesTheTemplateAttributes) {
  AccessibleDocument doc;
  doc.width = 100;
  doc.height = 50;
  WidgetNode n = Node(WidgetClass::kCheckBoxUnselected, {10, 10, 27, 27});
  n.id = "elem1";
  n.value = "checkbox";
  n.label = "Checkbox 1";
  n.tab_index = 1;
  doc.nodes.push_back(n);
  const std::string html = EmitHtml(doc);
  const std::regex input(
      R"re(<input role="checkbox" value="checkbox" name="checkbox1" tabindex="1" aria-label="Checkbox 1" id="elem1" type="checkbox" style="position: absolute; left:10px; top:10px; width:18px; height:18px" />)re");
  EXPECT_TRUE(std::regex_search(html, input)) << html;
  EXPECT_EQ(html.find(" checked"), std::string::npos);
}

TEST(EmitHtmlTest, EmptyDocumentIsContainerOnly) {
  AccessibleDocument doc;
  doc.width = 64;
  doc.height = 32;
  const std::string html = EmitHtml(doc);
  EXPECT_NE(html.find(R"(<div id="canvas-a11y" aria-live="polite" style="position: relative; width: 64px; height: 32px">)"),
            std::string::npos);
  EXPECT_EQ(html.find("<input"), std::string::npos);
  EXPECT_EQ(oracle::AuditHtml(html).inputs, 0);
}

TEST(EmitHtmlTest, EscapesAndPassesAudit) {
  const std::string html = EmitHtml(SampleDocument());
  const auto audit = oracle::AuditHtml(html);
  EXPECT_EQ(audit.inputs, 5);
  EXPECT_TRUE(audit.problems.empty()) << audit.problems.front();
  EXPECT_NE(html.find("Remember &lt;me&gt;"), std::string::npos);
  EXPECT_NE(html.find("Go &quot;now&quot;"), std::string::npos);
  EXPECT_NE(html.find(R"(type="checkbox" checked)"), std::string::npos);
  EXPECT_NE(html.find(R"(type="radio")"), std::string::npos);
  EXPECT_NE(html.find(R"(type="button")"), std::string::npos);
  EXPECT_NE(html.find(R"(type="text")"), std::string::npos);
  EXPECT_NE(html.find("<label"), std::string::npos);
  EXPECT_NE(html.find("addEventListener(\"keyup\""), std::string::npos);
  EXPECT_EQ(html, EmitHtml(SampleDocument()));
}

TEST(EmitHtmlTest, ScriptDataCannotCloseTheScript) {
  AccessibleDocument doc = SampleDocument();
  doc.nodes[0].bindings[0].binding.handler_ref = "</script><b>";
  const std::string html = EmitHtml(doc);
  const auto open = html.find("<script>");
  EXPECT_EQ(html.find("</script>", open), html.rfind("</script>"));
}

TEST(EmitHtmlTest, AuditCatchesViolations) {
  EXPECT_FALSE(oracle::AuditHtml(R"(<div><button>x</button></div>)").problems.empty());
  EXPECT_FALSE(oracle::AuditHtml(R"(<input role="checkbox" tabindex="2" value="v" />)").problems.empty());
  EXPECT_FALSE(oracle::AuditHtml(R"(<input role="checkbox" tabindex="1" />)").problems.empty());
  EXPECT_FALSE(oracle::AuditHtml(R"(<div tabindex="0"></div>)").problems.empty());
}

TEST(EmitJsonTest, EmptyDocument) {
  AccessibleDocument doc;
  doc.width = 10;
  doc.height = 20;
  const std::string json = EmitJson(doc);
  EXPECT_NE(json.find(R"("height":20)"), std::string::npos);
  EXPECT_NE(json.find(R"("nodes":[])"), std::string::npos);
  EXPECT_EQ(ParseDocumentJson(json), doc);
}

TEST(EmitJsonTest, RoundTripAndCanonical) {
  const AccessibleDocument doc = SampleDocument();
  const std::string json = EmitJson(doc);
  const AccessibleDocument back = ParseDocumentJson(json);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(EmitJson(back), json);
  // Keys are sorted: "bbox" precedes "bindings" precedes "checked".
  const auto node = json.find(R"("nodes":[{)");
  ASSERT_NE(node, std::string::npos);
  EXPECT_LT(json.find(R"("bbox")", node), json.find(R"("bindings")", node));
  EXPECT_LT(json.find(R"("bindings")", node), json.find(R"("checked")", node));
}

TEST(EmitJsonTest, OneNodeCarriesEveryField) {
  AccessibleDocument doc;
  doc.width = doc.height = 50;
  WidgetNode n = Node(WidgetClass::kRectButton, {1, 2, 30, 20});
  n.id = "elem1";
  n.tab_index = 1;
  n.value = "OK";
  n.label = "OK";
  doc.nodes.push_back(n);
  const std::string json = EmitJson(doc);
  for (const char* key : {"\"id\"", "\"class\"", "\"bbox\"", "\"label\"", "\"value\"",
                          "\"tab_index\"", "\"bindings\"", "\"checked\"", "\"group\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(ParseDocumentJson(json).nodes.size(), 1u);
}

TEST(ParseDocumentJsonTest, RejectsSchemaViolations) {
  EXPECT_THROW(ParseDocumentJson("[]"), ParseError);
  EXPECT_THROW(ParseDocumentJson("{"), ParseError);
  std::string json = EmitJson(SampleDocument());
  json.replace(json.find("\"CheckBoxSelected\""), 18, "\"Spinner\"");
  try {
    ParseDocumentJson(json);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "nodes[0].class");
  }
}

}  // namespace
}  // namespace canvasa11y
