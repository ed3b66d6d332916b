// Demo page logic. Geometry comes back from wasm as JSON; y points up, so
// every drawing sits in a group flipped with scale(1,-1).
import init, { measure, quad_explorer, parallelogram_fold } from "./pkg/symmetria_web.js";

const NS = "http://www.w3.org/2000/svg";
const BODY = { fill: "#dce6f2", stroke: "#1f3b63" };
const REGION = { fill: "#f4a460", "fill-opacity": 0.6, stroke: "#a0522d" };
const ACCENT = "#c0392b";

function el(name, attrs, parent) {
  const e = document.createElementNS(NS, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (parent) parent.appendChild(e);
  return e;
}

const pts = (list) => list.map(([x, y]) => `${x},${y}`).join(" ");
const fmt = (x) => (x === null || x === undefined ? "n/a" : x.toFixed(9));

// Draws a result into `svg`. With `view` the viewBox is fixed, otherwise it
// is fitted to the body. Returns the flipped group.
function draw(svg, r, view) {
  svg.replaceChildren();
  let [x0, y0, w, h] = view ?? fit(r.body);
  svg.setAttribute("viewBox", `${x0} ${-(y0 + h)} ${w} ${h}`);
  const s = Math.max(w, h) / 300;
  const g = el("g", { transform: "scale(1,-1)" }, svg);
  if (r.body) el("polygon", { points: pts(r.body), ...BODY, "stroke-width": 1.5 * s }, g);
  if (r.region) el("polygon", { points: pts(r.region), ...REGION, "stroke-width": s }, g);
  if (r.line) {
    const [[ax, ay], [bx, by]] = r.line;
    el("line", { x1: ax, y1: ay, x2: bx, y2: by, stroke: ACCENT, "stroke-width": 1.5 * s,
      "stroke-dasharray": `${6 * s} ${3 * s}` }, g);
  }
  if (r.center) el("circle", { cx: r.center[0], cy: r.center[1], r: 4 * s, fill: ACCENT }, g);
  return g;
}

function fit(body) {
  const xs = body.map((p) => p[0]), ys = body.map((p) => p[1]);
  const [lx, hx, ly, hy] = [Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys)];
  const size = Math.max(hx - lx, hy - ly) * 1.15;
  return [(lx + hx - size) / 2, (ly + hy - size) / 2, size, size];
}

function showError(target, e) {
  target.innerHTML = `<span class="err">${e.message ?? e}</span>`;
}

// Polygon editor.
function editor() {
  const svg = document.getElementById("editor-svg");
  const kind = document.getElementById("editor-kind");
  const out = document.getElementById("editor-value");
  const VIEW = [-5, -5, 10, 10];
  let points = [[-3, -2], [3, -2.5], [2, 2], [-1.5, 3]];
  let dragging = null;

  const toWorld = (ev) => {
    const m = svg.getScreenCTM().inverse();
    const p = new DOMPoint(ev.clientX, ev.clientY).matrixTransform(m);
    return [p.x, -p.y];
  };

  function render() {
    let g;
    if (points.length >= 3) {
      try {
        const r = JSON.parse(measure(kind.value, new Float64Array(points.flat())));
        g = draw(svg, r, VIEW);
        out.textContent = `${kind.value} = ${fmt(r.value)}`;
      } catch (e) {
        g = draw(svg, {}, VIEW);
        showError(out, e);
      }
    } else {
      g = draw(svg, {}, VIEW);
      out.textContent = "add at least three points";
    }
    points.forEach(([x, y], i) => {
      const c = el("circle", { cx: x, cy: y, r: 0.16, fill: "#1f3b63", cursor: "move" }, g);
      c.addEventListener("pointerdown", (ev) => {
        ev.stopPropagation();
        if (ev.shiftKey) {
          points.splice(i, 1);
          render();
        } else {
          dragging = i;
          svg.setPointerCapture(ev.pointerId);
        }
      });
    });
  }

  svg.addEventListener("pointerdown", (ev) => {
    points.push(toWorld(ev));
    render();
  });
  svg.addEventListener("pointermove", (ev) => {
    if (dragging === null) return;
    points[dragging] = toWorld(ev);
    render();
  });
  svg.addEventListener("pointerup", () => (dragging = null));
  kind.addEventListener("change", render);
  document.getElementById("editor-clear").addEventListener("click", () => {
    points = [];
    render();
  });
  document.getElementById("editor-random").addEventListener("click", () => {
    points = Array.from({ length: 7 }, () => [8 * Math.random() - 4, 8 * Math.random() - 4]);
    render();
  });
  render();
}

// Quadrilateral family explorer.
function quad() {
  const svg = document.getElementById("quad-svg");
  const eps = document.getElementById("quad-eps");
  const alpha = document.getElementById("quad-alpha");
  const out = document.getElementById("quad-value");
  function render() {
    const e = Number(eps.value), a = Number(alpha.value);
    document.getElementById("quad-eps-out").textContent = e.toFixed(3);
    document.getElementById("quad-alpha-out").textContent = a.toFixed(3);
    try {
      const r = JSON.parse(quad_explorer(e, a));
      draw(svg, r);
      out.innerHTML =
        `best overlap at α: ${fmt(r.value)}<br>` +
        `closed form (α ≤ ${r.closed_form_range.toFixed(4)}): ${fmt(r.closed_form)}<br>` +
        `axiality of Q(ε): ${fmt(r.axiality)}<br>limit (1+√2)/3: ${fmt(r.limit)}`;
    } catch (err) {
      showError(out, err);
    }
  }
  eps.addEventListener("input", render);
  alpha.addEventListener("input", render);
  render();
}

// Parallelogram folding.
function para() {
  const svg = document.getElementById("para-svg");
  const d1 = document.getElementById("para-d1");
  const h = document.getElementById("para-h");
  const out = document.getElementById("para-value");
  function render() {
    const a = Number(d1.value), b = Number(h.value);
    document.getElementById("para-d1-out").textContent = a.toFixed(3);
    document.getElementById("para-h-out").textContent = b.toFixed(3);
    try {
      const r = JSON.parse(parallelogram_fold(a, b));
      draw(svg, r);
      out.innerHTML =
        `folding (engine): ${fmt(r.value)}<br>closed form: ${fmt(r.closed_form)}<br>` +
        `floor 1/φ: ${fmt(r.floor)}`;
    } catch (err) {
      showError(out, err);
    }
  }
  d1.addEventListener("input", render);
  h.addEventListener("input", render);
  render();
}

await init();
editor();
quad();
para();
