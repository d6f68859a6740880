// Ray picking: closest garden entity under a screen point, walking hits
// up to the owning entity group.

import * as THREE from 'three'
import { ENTITY_TAG, GardenGraph } from './garden'

const raycaster = new THREE.Raycaster()

export function entityIdForObject(object: THREE.Object3D): string | null {
  let node: THREE.Object3D | null = object
  while (node) {
    if (node.userData.tag === ENTITY_TAG) return node.userData.entityId as string
    node = node.parent
  }
  return null
}

export function pickEntity(
  graph: GardenGraph,
  camera: THREE.Camera,
  ndcX: number,
  ndcY: number,
): string | null {
  raycaster.setFromCamera(new THREE.Vector2(ndcX, ndcY), camera)
  const hits = raycaster.intersectObjects(graph.root.children, true)
  for (const hit of hits) {
    const id = entityIdForObject(hit.object)
    if (id !== null) return id // hits are sorted by distance; first wins
  }
  return null
}

export function screenToNdc(
  clientX: number,
  clientY: number,
  rect: { left: number; top: number; width: number; height: number },
): [number, number] {
  return [
    ((clientX - rect.left) / rect.width) * 2 - 1,
    -(((clientY - rect.top) / rect.height) * 2 - 1),
  ]
}
