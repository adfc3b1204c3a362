import init, { persistence, image_persistence, generate } from "./pkg/pl_persistence_demo.js";

const $ = (id) => document.getElementById(id);
const PAIR_COLORS = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"];

function parseValues(text) {
  return Float64Array.from(
    text.split(/[\s,]+/).filter((t) => t.length > 0).map(Number)
  );
}

function unpack(flat) {
  const pairs = [];
  for (let i = 0; i < flat.length; i += 4) {
    pairs.push({
      birth: flat[i],
      death: flat[i + 1],
      bi: flat[i + 2],
      di: flat[i + 3] < 0 ? null : flat[i + 3],
    });
  }
  return pairs;
}

function range(arrays) {
  let lo = Infinity;
  let hi = -Infinity;
  for (const a of arrays) {
    for (const v of a) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  return [lo, hi];
}

function drawPlot(g, f, pairs) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  const w = canvas.width;
  const h = canvas.height;
  const pad = 12;
  ctx.clearRect(0, 0, w, h);
  const [lo, hi] = range(f ? [g, f] : [g]);
  const x = (i) => pad + (g.length === 1 ? 0.5 : i / (g.length - 1)) * (w - 2 * pad);
  const y = (v) => h - pad - ((v - lo) / (hi - lo)) * (h - 2 * pad);

  const curve = (values, color) => {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    values.forEach((v, i) => (i === 0 ? ctx.moveTo(x(i), y(v)) : ctx.lineTo(x(i), y(v))));
    ctx.stroke();
  };
  if (f) curve(f, "#ff7f0e");
  curve(g, "#333");

  // Each finite pair links its birth sample to its death sample.
  pairs.forEach((p, k) => {
    if (p.di === null) return;
    const color = PAIR_COLORS[k % PAIR_COLORS.length];
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.setLineDash([4, 3]);
    ctx.beginPath();
    ctx.moveTo(x(p.bi), y(p.birth));
    ctx.lineTo(x(p.di), y(p.death));
    ctx.stroke();
    ctx.setLineDash([]);
    for (const [i, v] of [[p.bi, p.birth], [p.di, p.death]]) {
      ctx.beginPath();
      ctx.arc(x(i), y(v), 3, 0, 2 * Math.PI);
      ctx.fill();
    }
  });
}

function drawDiagram(pairs) {
  const canvas = $("diagram");
  const ctx = canvas.getContext("2d");
  const s = canvas.width;
  const pad = 24;
  ctx.clearRect(0, 0, s, s);
  const finite = pairs.flatMap((p) => (p.di === null ? [p.birth] : [p.birth, p.death]));
  const [lo, hi] = range([finite]);
  const top = hi + (hi - lo) * 0.1;
  const px = (v) => pad + ((v - lo) / (top - lo)) * (s - 2 * pad);
  const py = (v) => s - pad - ((v - lo) / (top - lo)) * (s - 2 * pad);

  ctx.strokeStyle = "#aaa";
  ctx.beginPath();
  ctx.moveTo(px(lo), py(lo));
  ctx.lineTo(px(top), py(top));
  ctx.moveTo(pad, py(top));
  ctx.lineTo(s - pad, py(top));
  ctx.stroke();
  ctx.fillStyle = "#666";
  ctx.fillText("inf", 2, py(top) + 4);
  ctx.fillText("birth", s / 2 - 12, s - 6);

  pairs.forEach((p, k) => {
    ctx.fillStyle = p.di === null ? "#000" : PAIR_COLORS[k % PAIR_COLORS.length];
    ctx.beginPath();
    ctx.arc(px(p.birth), py(p.di === null ? top : p.death), 4, 0, 2 * Math.PI);
    ctx.fill();
  });
}

function showPairs(pairs, millis) {
  const finite = pairs.filter((p) => p.di !== null).length;
  $("summary").textContent =
    `${finite} finite pair(s), 1 essential, computed in ${millis.toFixed(2)} ms`;
  const rows = pairs.slice(0, 40).map(
    (p) =>
      `<tr><td>${p.birth}</td><td>${p.di === null ? "inf" : p.death}</td>` +
      `<td>${p.bi}</td><td>${p.di === null ? "" : p.di}</td></tr>`
  );
  $("pairs").innerHTML =
    "<tr><th>birth</th><th>death</th><th>at</th><th>dies at</th></tr>" + rows.join("");
}

function run(action) {
  $("error").textContent = "";
  try {
    action();
  } catch (e) {
    $("error").textContent = String(e.message ?? e);
  }
}

function computeDiagram() {
  const g = parseValues($("values").value);
  const start = performance.now();
  const pairs = unpack(persistence(g, $("circle").checked));
  showPairs(pairs, performance.now() - start);
  drawPlot(g, null, pairs);
  drawDiagram(pairs);
}

function computeImage() {
  const g = parseValues($("values").value);
  const amount = Number($("noise").value);
  const noise = generate("random", g.length, BigInt($("seed").value) + 1n);
  const f = g.map((v, i) => v - amount * noise[i]);
  const start = performance.now();
  const pairs = unpack(image_persistence(f, g));
  showPairs(pairs, performance.now() - start);
  drawPlot(g, f, pairs);
  drawDiagram(pairs);
}

function fill() {
  const values = generate($("kind").value, Number($("n").value), BigInt($("seed").value));
  $("values").value = Array.from(values, (v) => +v.toFixed(3)).join(", ");
}

await init();
$("generate").addEventListener("click", () => run(() => { fill(); computeDiagram(); }));
$("compute").addEventListener("click", () => run(computeDiagram));
$("image").addEventListener("click", () => run(computeImage));
$("circle").addEventListener("change", () => run(computeDiagram));
run(() => { fill(); computeDiagram(); });
