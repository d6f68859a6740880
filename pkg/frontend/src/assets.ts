// Procedural low-poly stand-ins for the bundled archetypes. Unknown
// archetype names degrade to a placeholder so new models can be added
// without code changes elsewhere.

import * as THREE from 'three'
import { HslColor } from './types'

export const SATELLITE_NAME = 'satellite'
export const BODY_NAME = 'body'

export function tintMaterial(color: HslColor): THREE.MeshStandardMaterial {
  const material = new THREE.MeshStandardMaterial()
  material.color.setHSL(color.h / 360, color.s / 100, color.l / 100)
  return material
}

type AssetBuilder = (tint: THREE.MeshStandardMaterial) => THREE.Object3D

const green = () => new THREE.MeshStandardMaterial({ color: 0x3c7a3c })
const brown = () => new THREE.MeshStandardMaterial({ color: 0x6b4a2b })

function flower(tint: THREE.MeshStandardMaterial): THREE.Object3D {
  const group = new THREE.Group()
  const stem = new THREE.Mesh(new THREE.CylinderGeometry(0.05, 0.05, 1), green())
  stem.position.y = 0.5
  const head = new THREE.Mesh(new THREE.IcosahedronGeometry(0.25), tint)
  head.position.y = 1.1
  group.add(stem, head)
  return group
}

function tree(tint: THREE.MeshStandardMaterial): THREE.Object3D {
  const group = new THREE.Group()
  const trunk = new THREE.Mesh(new THREE.CylinderGeometry(0.15, 0.2, 1.6), brown())
  trunk.position.y = 0.8
  const crown = new THREE.Mesh(new THREE.ConeGeometry(0.8, 1.4, 8), tint)
  crown.position.y = 2.2
  group.add(trunk, crown)
  return group
}

function shrub(tint: THREE.MeshStandardMaterial): THREE.Object3D {
  const bush = new THREE.Mesh(new THREE.SphereGeometry(0.5, 8, 6), tint)
  bush.position.y = 0.5
  const group = new THREE.Group()
  group.add(bush)
  return group
}

function placeholder(tint: THREE.MeshStandardMaterial): THREE.Object3D {
  const box = new THREE.Mesh(new THREE.BoxGeometry(0.6, 1, 0.6), tint)
  box.position.y = 0.5
  const group = new THREE.Group()
  group.add(box)
  return group
}

const BUILDERS: Record<string, AssetBuilder> = { flower, tree, shrub }

export function buildArchetype(
  archetype: string,
  color: HslColor,
): THREE.Object3D {
  const builder = BUILDERS[archetype] ?? placeholder
  const body = builder(tintMaterial(color))
  body.name = BODY_NAME
  return body
}

/** Small cloud puff used for satellite meshes. */
export function buildSatellite(): THREE.Object3D {
  const cloud = new THREE.Mesh(
    new THREE.SphereGeometry(0.18, 6, 4),
    new THREE.MeshStandardMaterial({ color: 0xf0f0f5 }),
  )
  cloud.name = SATELLITE_NAME
  return cloud
}
