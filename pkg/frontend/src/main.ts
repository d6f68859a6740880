// Drawing layer and DOM wiring. Everything checkable headlessly lives in
// the other modules; this file only renders and routes input.

import * as THREE from 'three'
import { GardenApi } from './api'
import { cameraPose, MODE_SWITCH_SECONDS, ViewMode } from './camera'
import { applyPositions, buildGarden, GardenGraph } from './garden'
import { pickEntity, screenToNdc } from './pick'
import {
  ClientState,
  isRecoverable,
  loadState,
  resetLayout,
  selectEntity,
  setViewMode,
  tick,
  toggleLegend,
  triggerGrouping,
} from './state'
import { HslColor } from './types'

const api = new GardenApi('')

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T
}

function hsl(c: HslColor): string {
  return `hsl(${c.h}, ${c.s}%, ${c.l}%)`
}

function toast(message: string): void {
  const box = el<HTMLDivElement>('toast')
  box.textContent = message
  box.classList.add('visible')
  setTimeout(() => box.classList.remove('visible'), 2500)
}

async function showTooltip(state: ClientState, id: string): Promise<void> {
  const overlay = el<HTMLDivElement>('tooltip')
  overlay.classList.add('visible')
  try {
    const pairs = await api.entityTooltip(id)
    overlay.innerHTML =
      `<b>${id}</b><br>` +
      pairs.map(([q, v]) => `${q}: ${v}`).join('<br>')
  } catch {
    overlay.textContent = `could not load details for ${id}`
  }
}

function hideTooltip(): void {
  el<HTMLDivElement>('tooltip').classList.remove('visible')
}

async function renderLegendPanel(state: ClientState): Promise<void> {
  const panel = el<HTMLDivElement>('legend')
  panel.classList.toggle('visible', state.legendVisible)
  if (!state.legendVisible || panel.childElementCount > 0) return
  const legend = await api.legend()
  for (const entry of legend.entries) {
    const section = document.createElement('div')
    section.className = 'legend-section'
    const rows = entry.items
      .map(([key, value]) => {
        if (value !== null && typeof value === 'object' && 'h' in (value as object)) {
          const color = value as HslColor
          return `<div><span class="swatch" style="background:${hsl(color)}"></span>${key}</div>`
        }
        return `<div>${key} &rarr; ${String(value)}</div>`
      })
      .join('')
    section.innerHTML = `<h3>${entry.channel} &larr; ${entry.question}</h3>${rows}`
    panel.appendChild(section)
  }
}

function buildGroupingMenu(state: ClientState, onPick: (q: string) => void): void {
  const menu = el<HTMLSelectElement>('group-menu')
  const questions = new Set<string>()
  for (const entry of state.scene.legend.entries) {
    // only categorical-style entries make sense to group by; the server
    // rejects anything else with a 422 which we surface as a toast
    questions.add(entry.question)
  }
  for (const q of questions) {
    const option = document.createElement('option')
    option.value = q
    option.textContent = `group by ${q}`
    menu.appendChild(option)
  }
  menu.addEventListener('change', () => {
    if (menu.value) onPick(menu.value)
  })
}

async function start(): Promise<void> {
  let state: ClientState
  try {
    state = await loadState(api)
  } catch (error) {
    el<HTMLDivElement>('error').textContent = `failed to load scene: ${String(error)}`
    el<HTMLDivElement>('error').classList.add('visible')
    return
  }

  const renderer = new THREE.WebGLRenderer({ antialias: true })
  renderer.setSize(window.innerWidth, window.innerHeight)
  renderer.xr.enabled = true
  document.body.appendChild(renderer.domElement)

  const scene3 = new THREE.Scene()
  scene3.background = new THREE.Color(0xbfe3ff)
  scene3.add(new THREE.HemisphereLight(0xffffff, 0x556644, 1.2))
  const sun = new THREE.DirectionalLight(0xffffff, 1.0)
  sun.position.set(30, 50, 20)
  scene3.add(sun)

  const { width, depth } = state.scene.bounds
  const ground = new THREE.Mesh(
    new THREE.PlaneGeometry(width, depth),
    new THREE.MeshStandardMaterial({ color: 0x77aa66 }),
  )
  ground.rotation.x = -Math.PI / 2
  ground.position.set(width / 2, 0, depth / 2)
  scene3.add(ground)

  const graph: GardenGraph = buildGarden(state.scene)
  scene3.add(graph.root)

  const camera = new THREE.PerspectiveCamera(
    60,
    window.innerWidth / window.innerHeight,
    0.1,
    1000,
  )
  let cameraFrom = new THREE.Vector3()
  let cameraTo = new THREE.Vector3()
  let targetFrom = new THREE.Vector3()
  let targetTo = new THREE.Vector3()
  let lookTarget = new THREE.Vector3()
  let modeBlend = 1

  function applyMode(mode: ViewMode): void {
    setViewMode(state, mode)
    const pose = cameraPose(mode, state.scene.bounds, {
      fovYDeg: camera.fov,
      aspect: camera.aspect,
    })
    cameraFrom.copy(camera.position)
    targetFrom.copy(lookTarget)
    cameraTo.set(...pose.position)
    targetTo.set(...pose.target)
    modeBlend = 0
  }

  applyMode('GROUND')
  camera.position.copy(cameraTo)
  lookTarget.copy(targetTo)
  camera.lookAt(lookTarget)
  modeBlend = 1

  const keys = new Set<string>()
  window.addEventListener('keydown', (event) => {
    keys.add(event.key.toLowerCase())
    if (event.key === '1') applyMode('GROUND')
    if (event.key === '2') applyMode('AERIAL')
    if (event.key === '3') applyMode('TOPDOWN')
    if (event.key.toLowerCase() === 'l') {
      toggleLegend(state)
      void renderLegendPanel(state)
    }
    if (event.key === 'Escape') {
      selectEntity(state, null)
      hideTooltip()
    }
    if (event.key.toLowerCase() === 'r') {
      resetLayout(state)
    }
  })
  window.addEventListener('keyup', (event) => keys.delete(event.key.toLowerCase()))

  renderer.domElement.addEventListener('pointerdown', (event) => {
    const [x, y] = screenToNdc(
      event.clientX,
      event.clientY,
      renderer.domElement.getBoundingClientRect(),
    )
    const id = pickEntity(graph, camera, x, y)
    selectEntity(state, id)
    if (id) void showTooltip(state, id)
    else hideTooltip()
  })

  buildGroupingMenu(state, (question) => {
    triggerGrouping(state, api, question).catch((error) => {
      if (isRecoverable(error)) toast(`grouping failed: ${String(error)}`)
      else throw error
    })
  })

  // optional immersive mode where the browser supports WebXR
  const nav = navigator as Navigator & { xr?: { isSessionSupported(m: string): Promise<boolean> } }
  if (nav.xr) {
    void nav.xr.isSessionSupported('immersive-vr').then((supported) => {
      if (!supported) return
      const button = el<HTMLButtonElement>('enter-vr')
      button.classList.add('visible')
      button.addEventListener('click', () => {
        void (navigator as any).xr
          .requestSession('immersive-vr', { optionalFeatures: ['local-floor'] })
          .then((session: XRSession) => renderer.xr.setSession(session))
      })
    })
  }

  window.addEventListener('resize', () => {
    camera.aspect = window.innerWidth / window.innerHeight
    camera.updateProjectionMatrix()
    renderer.setSize(window.innerWidth, window.innerHeight)
  })

  const clock = new THREE.Clock()
  renderer.setAnimationLoop(() => {
    const dt = clock.getDelta()

    if (tick(state, dt)) {
      applyPositions(graph, state.positions)
    } else {
      applyPositions(graph, state.positions)
    }

    if (modeBlend < 1) {
      modeBlend = Math.min(1, modeBlend + dt / MODE_SWITCH_SECONDS)
      const s = modeBlend * modeBlend * (3 - 2 * modeBlend)
      camera.position.lerpVectors(cameraFrom, cameraTo, s)
      lookTarget.lerpVectors(targetFrom, targetTo, s)
      if (state.mode === 'TOPDOWN' && modeBlend >= 1) {
        // exact straight-down pitch; lookAt is degenerate here
        camera.rotation.set(-Math.PI / 2, 0, 0)
      } else {
        camera.lookAt(lookTarget)
      }
    }

    if (state.mode === 'GROUND' && modeBlend >= 1) {
      const speed = 6 * dt
      const forward = new THREE.Vector3()
      camera.getWorldDirection(forward)
      forward.y = 0
      forward.normalize()
      const right = new THREE.Vector3().crossVectors(forward, camera.up)
      if (keys.has('w')) camera.position.addScaledVector(forward, speed)
      if (keys.has('s')) camera.position.addScaledVector(forward, -speed)
      if (keys.has('a')) camera.position.addScaledVector(right, -speed)
      if (keys.has('d')) camera.position.addScaledVector(right, speed)
      if (keys.has('q')) camera.position.y += speed // free vertical movement
      if (keys.has('e')) camera.position.y -= speed
      if (keys.has('arrowleft')) camera.rotateY(1.8 * dt)
      if (keys.has('arrowright')) camera.rotateY(-1.8 * dt)
    }

    renderer.render(scene3, camera)
  })
}

void start()
