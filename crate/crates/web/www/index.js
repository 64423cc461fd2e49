import init, { munnTree, fimFold, finiteIndex } from "./pkg/invco_web.js";

const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs = {}, text) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function clear(node) {
  while (node.firstChild) node.removeChild(node.firstChild);
}

function arrowhead(svg) {
  const defs = el("defs");
  const marker = el("marker", { id: "arrow", viewBox: "0 0 10 10", refX: 10, refY: 5, markerWidth: 7, markerHeight: 7, orient: "auto" });
  marker.appendChild(el("path", { d: "M0,0 L10,5 L0,10 z", fill: "#555" }));
  defs.appendChild(marker);
  svg.appendChild(defs);
}

function showError(info, result) {
  info.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = result.error;
  info.appendChild(p);
}

// Each generator gets a direction; steps halve with depth so the tree never overlaps.
function directions(letters) {
  const gens = [...new Set(letters.map((c) => c.toLowerCase()))].sort();
  const dirs = {};
  gens.forEach((g, i) => {
    const angle = (Math.PI * i) / gens.length;
    dirs[g] = [Math.cos(angle), Math.sin(angle)];
    dirs[g.toUpperCase()] = [-Math.cos(angle), -Math.sin(angle)];
  });
  return dirs;
}

function drawMunn() {
  const svg = document.getElementById("munn-svg");
  const info = document.getElementById("munn-info");
  const result = JSON.parse(munnTree(document.getElementById("munn-word").value));
  clear(svg);
  if (result.error) return showError(info, result);
  info.textContent = `mark ${result.mark || "ε"} · ${result.vertices.length} vertices · normal form ${result.normal_form || "ε"}` +
    (result.idempotent ? " · idempotent" : "");
  arrowhead(svg);
  const dirs = directions(result.edges.map((e) => e[1]));
  const pos = { "": [320, 200] };
  for (const v of result.vertices) {
    if (v === "") continue;
    const parent = pos[v.slice(0, -1)];
    const d = dirs[v[v.length - 1]];
    const step = 150 / Math.pow(1.8, v.length - 1);
    pos[v] = [parent[0] + d[0] * step, parent[1] - d[1] * step];
  }
  for (const [from, letter, to] of result.edges) {
    const [x1, y1] = pos[from];
    const [x2, y2] = pos[to];
    const len = Math.hypot(x2 - x1, y2 - y1);
    const r = 7 / len;
    svg.appendChild(el("line", { x1, y1, x2: x2 - (x2 - x1) * r, y2: y2 - (y2 - y1) * r, stroke: "#555", "marker-end": "url(#arrow)" }));
    svg.appendChild(el("text", { x: (x1 + x2) / 2 + 4, y: (y1 + y2) / 2 - 4, "font-size": 13 }, letter));
  }
  for (const v of result.vertices) {
    const [cx, cy] = pos[v];
    const isRoot = v === "";
    const isMark = v === result.mark;
    svg.appendChild(el("circle", { cx, cy, r: 6, fill: isRoot ? "#222" : "#fff", stroke: isMark ? "#c33" : "#222", "stroke-width": isMark ? 3 : 1.5 }));
  }
}

function drawFold() {
  const svg = document.getElementById("fold-svg");
  const info = document.getElementById("fold-info");
  const result = JSON.parse(fimFold(document.getElementById("fold-alphabet").value, document.getElementById("fold-gens").value));
  clear(svg);
  if (result.error) return showError(info, result);
  info.textContent = `index ${result.index}` + (result.full ? " · full" : "");
  arrowhead(svg);
  const n = result.automaton.states;
  const radius = n === 1 ? 0 : 150;
  const pos = [...Array(n).keys()].map((i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [320 + radius * Math.cos(a), 200 + radius * Math.sin(a)];
  });
  for (const [from, letter, to] of result.automaton.edges) {
    const [x1, y1] = pos[from];
    const [x2, y2] = pos[to];
    if (from === to) {
      svg.appendChild(el("path", { d: `M${x1 - 8},${y1 - 14} C${x1 - 30},${y1 - 60} ${x1 + 30},${y1 - 60} ${x1 + 8},${y1 - 14}`, fill: "none", stroke: "#555", "marker-end": "url(#arrow)" }));
      svg.appendChild(el("text", { x: x1 - 4, y: y1 - 52, "font-size": 13 }, letter));
      continue;
    }
    // bend edges so a pair of opposite edges does not overlap
    const mx = (x1 + x2) / 2 + (y2 - y1) * 0.15;
    const my = (y1 + y2) / 2 - (x2 - x1) * 0.15;
    const len = Math.hypot(x2 - mx, y2 - my);
    const ex = x2 - ((x2 - mx) * 18) / len;
    const ey = y2 - ((y2 - my) * 18) / len;
    svg.appendChild(el("path", { d: `M${x1},${y1} Q${mx},${my} ${ex},${ey}`, fill: "none", stroke: "#555", "marker-end": "url(#arrow)" }));
    svg.appendChild(el("text", { x: mx, y: my, "font-size": 13 }, letter));
  }
  pos.forEach(([cx, cy], i) => {
    svg.appendChild(el("circle", { cx, cy, r: 16, fill: "#fff", stroke: "#222", "stroke-width": i === 0 ? 3 : 1.5 }));
    svg.appendChild(el("text", { x: cx, y: cy + 4, "font-size": 11, "text-anchor": "middle" }, result.labels[i] || "ε"));
  });
}

function drawIndex() {
  const info = document.getElementById("index-info");
  const table = document.getElementById("index-table");
  const result = JSON.parse(finiteIndex(document.getElementById("index-semigroup").value, document.getElementById("index-gens").value));
  table.innerHTML = "";
  if (result.error) return showError(info, result);
  info.textContent = `|S| = ${result.order} · |L| = ${result.members.length} · index ${result.index}`;
  const head = table.insertRow();
  for (const h of ["coset", "representative", "members"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  result.cosets.forEach((c, i) => {
    const row = table.insertRow();
    row.insertCell().textContent = i + 1;
    row.insertCell().textContent = c.representative;
    row.insertCell().textContent = c.members.join(" ");
  });
}

function wire(formId, draw) {
  document.getElementById(formId).addEventListener("submit", (e) => {
    e.preventDefault();
    draw();
  });
  draw();
}

await init();
wire("munn-form", drawMunn);
wire("fold-form", drawFold);
wire("index-form", drawIndex);
