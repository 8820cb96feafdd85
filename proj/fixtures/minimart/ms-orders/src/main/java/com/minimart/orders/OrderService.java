package com.minimart.orders;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

import org.springframework.core.ParameterizedTypeReference;
import org.springframework.http.HttpEntity;
import org.springframework.http.HttpMethod;
import org.springframework.stereotype.Service;
import org.springframework.web.client.RestTemplate;

@Service
public class OrderService {

    private static final String CATALOG_URL = "http://ms-catalog:8080/api/v1/catalog";

    private final RestTemplate restTemplate;

    public OrderService(RestTemplate restTemplate) {
        this.restTemplate = restTemplate;
    }

    public void verify(Order order) {
        for (OrderLine item : order.getLines()) {
            Product p = restTemplate.getForObject(CATALOG_URL + "/products/" + item.getProductId(), Product.class);
            if (p == null) {
                throw new IllegalStateException("unknown product");
            }
        }
    }

    @SuppressWarnings("unchecked")
    public List<Product> featured() {
        // restTemplate.getForObject("http://ms-catalog/api/v1/catalog/featured", List.class);
        return restTemplate.getForObject(CATALOG_URL + "/items", List.class);
    }

    public Object charge(Order order) {
        Map<String, Object> body = new HashMap<>();
        body.put("orderId", order.getId());
        return restTemplate.postForObject("http://ms-payments/api/v1/payments/charge", body, Object.class);
    }

    public UserDto owner(Order order) {
        Integer userId = order.getUserId();
        HttpEntity<Void> entity = HttpEntity.EMPTY;
        return restTemplate.exchange("http://ms-users/api/v1/users/" + userId, HttpMethod.GET, entity,
                new ParameterizedTypeReference<UserDto>() {}).getBody();
    }
}
