package com.minimart.orders;

import java.util.Map;
import java.util.UUID;
import java.util.concurrent.ConcurrentHashMap;

class OrderStore {
    private final Map<UUID, Order> orders = new ConcurrentHashMap<>();

    Order find(UUID id) {
        return orders.get(id);
    }

    Order save(Order order) {
        orders.put(order.getId(), order);
        return order;
    }
}
